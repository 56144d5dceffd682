#include "codimlab/envelope.hpp"

#include <algorithm>
#include <stdexcept>

namespace codimlab {

namespace {

RowVec flatten_matrix(const Matrix& m) {
  std::vector<std::pair<std::size_t, Rational>> entries;
  for (std::size_t i = 0; i < m.rows(); ++i)
    m.row(i).for_each([&](std::size_t j, const Rational& v) {
      entries.emplace_back(i * m.cols() + j, v);
    });
  return RowVec::from_entries(m.rows() * m.cols(), std::move(entries));
}

Matrix unflatten(std::size_t f, const RowVec& v) {
  Matrix m(f, f);
  v.for_each([&](std::size_t idx, const Rational& val) { m.set(idx / f, idx % f, val); });
  return m;
}

// Monic gcd of rational polynomials (coefficient vectors, low degree first).
std::vector<Rational> poly_gcd(std::vector<Rational> a, std::vector<Rational> b) {
  auto trim = [](std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    while (a.size() >= b.size() && !a.empty()) {
      Rational q = a.back() / b.back();
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
      trim(a);
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

Matrix poly_eval(const std::vector<Rational>& p, const Matrix& m) {
  Matrix acc(m.rows(), m.cols());
  Matrix power = Matrix::identity(m.rows());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != 0) acc = acc.plus(power.scaled(p[i]));
    if (i + 1 < p.size()) power = power.multiply(m);
  }
  return acc;
}

// Minimal polynomial of a square matrix, low degree first, monic.
std::vector<Rational> minimal_polynomial(const Matrix& m) {
  const std::size_t f = m.rows();
  RankAccumulator acc(f * f);
  std::vector<RowVec> powers;
  Matrix power = Matrix::identity(f);
  while (true) {
    RowVec flat = flatten_matrix(power);
    powers.push_back(flat);
    if (!acc.insert(flat)) break;
    power = power.multiply(m);
  }
  // The last power is dependent on the previous ones: solve for coefficients.
  std::size_t deg = powers.size() - 1;
  Matrix system(f * f, deg);
  for (std::size_t k = 0; k < deg; ++k)
    powers[k].for_each([&](std::size_t idx, const Rational& v) { system.set(idx, k, v); });
  RowVec rhs(f * f);
  powers[deg].for_each([&](std::size_t idx, const Rational& v) { rhs.set(idx, v); });
  auto sol = solve_linear(system, rhs);
  if (!sol) throw std::logic_error("minimal_polynomial: dependency solve failed");
  std::vector<Rational> p(deg + 1);
  for (std::size_t k = 0; k < deg; ++k) p[k] = -sol->at(k);
  p[deg] = Rational(1);
  return p;
}

// Rational roots of a rational polynomial, via integer scaling and the
// rational root theorem (divisors of the constant over divisors of the lead).
std::vector<Rational> rational_roots(const std::vector<Rational>& p) {
  std::vector<Rational> roots;
  auto eval = [&](const Rational& x) {
    Rational acc;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
  };
  if (eval(Rational(0)) == 0) roots.push_back(Rational(0));
  // Scale to a primitive integer polynomial.
  Integer common_den = 1;
  for (const auto& c : p) common_den = lcm(common_den, Integer(denominator(c)));
  std::vector<Integer> ip;
  ip.reserve(p.size());
  for (const auto& c : p) ip.push_back(Integer(numerator(c)) * (common_den / Integer(denominator(c))));
  std::size_t low = 0;
  while (low < ip.size() && ip[low] == 0) ++low;
  if (low >= ip.size() - 1) return roots;
  Integer constant = abs(ip[low]);
  Integer lead = abs(ip.back());
  auto divisors = [](const Integer& v) {
    std::vector<Integer> ds;
    for (Integer d = 1; d * d <= v && d <= 100000; ++d)
      if (v % d == 0) {
        ds.push_back(d);
        ds.push_back(v / d);
      }
    return ds;
  };
  for (const auto& a : divisors(constant))
    for (const auto& b : divisors(lead))
      for (int sign : {1, -1}) {
        Rational cand(a * sign, b);
        mpq_canonicalize(cand.backend().data());
        if (eval(cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
  return roots;
}

bool is_invariant(const ModuleAction& action, const Subspace& u) {
  for (const auto& g : action.generators)
    for (const auto& row : u.basis())
      if (!u.contains(g.apply(row))) return false;
  return true;
}

// Attempts to split the module with one commutant element; returns a proper
// nonzero invariant subspace when it succeeds.
std::optional<Subspace> split_with(const ModuleAction& action, const Matrix& c) {
  const std::size_t f = action.dim;
  auto mu = minimal_polynomial(c);
  if (mu.size() <= 2) return std::nullopt;  // scalar: no information
  // Non-squarefree: gcd(mu, mu') is a proper factor.
  std::vector<Rational> dmu(mu.size() - 1);
  for (std::size_t i = 1; i < mu.size(); ++i) dmu[i - 1] = mu[i] * Rational(i);
  auto g = poly_gcd(mu, dmu);
  if (g.size() > 1 && g.size() < mu.size()) {
    Matrix gm = poly_eval(g, c);
    Subspace ker = Subspace::from_matrix(gm.kernel());
    if (ker.dim() > 0 && ker.dim() < f) return ker;
  }
  // Rational eigenvalue: kernel of (c - r) is invariant and proper.
  for (const auto& r : rational_roots(mu)) {
    Matrix shifted = c.plus(Matrix::identity(f).scaled(-r));
    Subspace ker = Subspace::from_matrix(shifted.kernel());
    if (ker.dim() > 0 && ker.dim() < f) return ker;
  }
  return std::nullopt;
}

}  // namespace

Envelope::Envelope(const ModuleAction& action) : f_(action.dim), span_(f_ * f_) {
  RankAccumulator acc(f_ * f_);
  std::vector<Matrix> frontier;
  auto try_add = [&](const Matrix& m) {
    if (acc.insert(flatten_matrix(m))) {
      basis_.push_back(m);
      frontier.push_back(m);
    }
  };
  try_add(Matrix::identity(f_));
  for (const auto& g : action.generators) try_add(g);
  while (!frontier.empty()) {
    std::vector<Matrix> next;
    for (const auto& m : frontier)
      for (const auto& g : action.generators) {
        Matrix prod = m.multiply(g);
        if (acc.insert(flatten_matrix(prod))) {
          basis_.push_back(prod);
          next.push_back(prod);
        }
      }
    frontier = std::move(next);
  }
  span_ = acc.to_subspace();
}

RowVec Envelope::flatten(const Matrix& m) const { return flatten_matrix(m); }

std::vector<Matrix> Envelope::radical_basis() const {
  const std::size_t n = basis_.size();
  // Work in the canonical RREF basis of the span.
  std::vector<Matrix> canon;
  canon.reserve(n);
  for (const auto& row : span_.basis()) canon.push_back(unflatten(f_, row));
  // Structure constants: coords of canon_i * canon_j.
  std::vector<std::vector<RowVec>> prod(n, std::vector<RowVec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto coords = span_.coordinates(flatten(canon[i].multiply(canon[j])));
      if (!coords) throw std::logic_error("envelope not closed under products");
      prod[i][j] = std::move(*coords);
    }
  // tr_reg(canon_a) = sum_k coord_k(canon_a * canon_k).
  std::vector<Rational> reg_trace(n);
  for (std::size_t a = 0; a < n; ++a) {
    Rational t;
    for (std::size_t k = 0; k < n; ++k) t += prod[a][k].at(k);
    reg_trace[a] = std::move(t);
  }
  Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational t;
      prod[i][j].for_each([&](std::size_t a, const Rational& v) { t += v * reg_trace[a]; });
      if (t != 0) {
        gram.set(i, j, t);
        if (j != i) gram.set(j, i, t);
      }
    }
  Matrix null = gram.kernel();
  std::vector<Matrix> rad;
  for (std::size_t r = 0; r < null.rows(); ++r) {
    Matrix m(f_, f_);
    null.row(r).for_each([&](std::size_t k, const Rational& v) {
      m = m.plus(canon[k].scaled(v));
    });
    rad.push_back(std::move(m));
  }
  return rad;
}

std::vector<Matrix> commutant(const ModuleAction& action) {
  const std::size_t f = action.dim;
  if (f == 0) return {};
  std::vector<RowVec> rows;
  for (const auto& g : action.generators) {
    // (X g - g X)(i, j) = sum_k X(i,k) g(k,j) - g(i,k) X(k,j) = 0
    for (std::size_t i = 0; i < f; ++i)
      for (std::size_t j = 0; j < f; ++j) {
        RowVec row(f * f);
        for (std::size_t k = 0; k < f; ++k) {
          const Rational& gkj = g.at(k, j);
          if (gkj != 0) row.set(i * f + k, row.at(i * f + k) + gkj);
          const Rational& gik = g.at(i, k);
          if (gik != 0) row.set(k * f + j, row.at(k * f + j) - gik);
        }
        if (!row.is_zero()) rows.push_back(std::move(row));
      }
  }
  std::vector<Matrix> result;
  if (rows.empty()) {
    // No constraints: the commutant is all of End(M).
    for (std::size_t i = 0; i < f; ++i)
      for (std::size_t j = 0; j < f; ++j) {
        Matrix m(f, f);
        m.set(i, j, Rational(1));
        result.push_back(std::move(m));
      }
    return result;
  }
  Matrix system = Matrix::from_rows(f * f, std::move(rows));
  Matrix null = system.kernel();
  for (std::size_t r = 0; r < null.rows(); ++r) result.push_back(unflatten(f, null.row(r)));
  return result;
}

Subspace spin(const ModuleAction& action, const RowVec& seed) {
  RankAccumulator acc(action.dim);
  std::vector<RowVec> frontier;
  if (acc.insert(seed)) frontier.push_back(seed);
  while (!frontier.empty()) {
    std::vector<RowVec> next;
    for (const auto& v : frontier)
      for (const auto& g : action.generators) {
        RowVec image = g.apply(v);
        if (acc.insert(image)) next.push_back(std::move(image));
      }
    frontier = std::move(next);
  }
  return acc.to_subspace();
}

Subspace invariant_closure(const ModuleAction& action, const Subspace& seed) {
  RankAccumulator acc(action.dim);
  std::vector<RowVec> frontier;
  for (const auto& row : seed.basis())
    if (acc.insert(row)) frontier.push_back(row);
  while (!frontier.empty()) {
    std::vector<RowVec> next;
    for (const auto& v : frontier)
      for (const auto& g : action.generators) {
        RowVec image = g.apply(v);
        if (acc.insert(image)) next.push_back(std::move(image));
      }
    frontier = std::move(next);
  }
  return acc.to_subspace();
}

ModuleAnalysis analyze_module(const ModuleAction& action) {
  ModuleAnalysis result{ModuleVerdict::Irreducible, std::nullopt, 0};
  const std::size_t f = action.dim;
  if (f == 0) throw std::invalid_argument("analyze_module: zero module");
  Envelope env(action);
  // Radical action: J(A) M is a proper invariant subspace when nonzero.
  auto rad = env.radical_basis();
  RankAccumulator jm(f);
  for (const auto& r : rad)
    for (std::size_t j = 0; j < f; ++j) jm.insert(r.apply(RowVec::unit(f, j)));
  if (jm.rank() > 0) {
    Subspace sub = jm.to_subspace();
    if (sub.dim() < f) {
      result.verdict = ModuleVerdict::Reducible;
      result.proper_submodule = sub;
      return result;
    }
    throw std::logic_error("analyze_module: radical acts surjectively");
  }
  auto comm = commutant(action);
  result.commutant_dim = comm.size();
  if (comm.size() == 1) return result;  // End = Q, irreducible and split
  // Semisimple with a bigger commutant: probe for a splitting element.
  std::vector<Matrix> probes = comm;
  for (std::size_t i = 0; i < comm.size(); ++i)
    for (std::size_t j = 0; j < comm.size(); ++j) probes.push_back(comm[i].multiply(comm[j]));
  for (std::size_t i = 0; i < comm.size(); ++i)
    for (std::size_t j = i + 1; j < comm.size(); ++j)
      for (long long k : {1LL, 2LL, 3LL})
        probes.push_back(comm[i].plus(comm[j].scaled(Rational(k))));
  for (const auto& c : probes) {
    auto sub = split_with(action, c);
    if (sub && is_invariant(action, *sub)) {
      result.verdict = ModuleVerdict::Reducible;
      result.proper_submodule = *sub;
      return result;
    }
  }
  result.verdict = ModuleVerdict::NonSplit;
  return result;
}

std::vector<Matrix> hom_space(const ModuleAction& m1, const ModuleAction& m2) {
  if (m1.generators.size() != m2.generators.size())
    throw std::invalid_argument("hom_space: generator count mismatch");
  const std::size_t f1 = m1.dim, f2 = m2.dim;
  std::vector<RowVec> rows;
  for (std::size_t t = 0; t < m1.generators.size(); ++t) {
    const Matrix& a1 = m1.generators[t];
    const Matrix& a2 = m2.generators[t];
    // X a1 = a2 X with X of shape f2 x f1.
    for (std::size_t i = 0; i < f2; ++i)
      for (std::size_t j = 0; j < f1; ++j) {
        RowVec row(f1 * f2);
        for (std::size_t k = 0; k < f1; ++k) {
          const Rational& v = a1.at(k, j);
          if (v != 0) row.set(i * f1 + k, row.at(i * f1 + k) + v);
        }
        for (std::size_t k = 0; k < f2; ++k) {
          const Rational& v = a2.at(i, k);
          if (v != 0) row.set(k * f1 + j, row.at(k * f1 + j) - v);
        }
        if (!row.is_zero()) rows.push_back(std::move(row));
      }
  }
  std::vector<Matrix> result;
  if (rows.empty()) {
    for (std::size_t i = 0; i < f2; ++i)
      for (std::size_t j = 0; j < f1; ++j) {
        Matrix m(f2, f1);
        m.set(i, j, Rational(1));
        result.push_back(std::move(m));
      }
    return result;
  }
  Matrix system = Matrix::from_rows(f1 * f2, std::move(rows));
  Matrix null = system.kernel();
  for (std::size_t r = 0; r < null.rows(); ++r) {
    Matrix m(f2, f1);
    null.row(r).for_each([&](std::size_t idx, const Rational& v) {
      m.set(idx / f1, idx % f1, v);
    });
    result.push_back(std::move(m));
  }
  return result;
}

bool irreducibles_isomorphic(const ModuleAction& m1, const ModuleAction& m2) {
  if (m1.dim != m2.dim) return false;
  return !hom_space(m1, m2).empty();
}

}  // namespace codimlab
