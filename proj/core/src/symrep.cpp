#include "codimlab/symrep.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace codimlab {

std::size_t Partition::n() const {
  std::size_t total = 0;
  for (std::size_t p : parts) total += p;
  return total;
}

std::string Partition::dashed() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << '-';
    os << parts[i];
  }
  return os.str();
}

bool Partition::operator<(const Partition& other) const {
  // Listing order: (n) first, (1^n) last — lexicographically decreasing.
  return other.parts < parts;
}

std::vector<Partition> partitions_of(std::size_t n) {
  std::vector<Partition> out;
  std::vector<std::size_t> current;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t max) {
    if (left == 0) {
      out.push_back({current});
      return;
    }
    for (std::size_t take = std::min(left, max); take >= 1; --take) {
      current.push_back(take);
      rec(left - take, take);
      current.pop_back();
    }
  };
  rec(n, n == 0 ? 1 : n);
  return out;
}

namespace {

std::vector<std::size_t> conjugate_parts(const Partition& lambda) {
  std::vector<std::size_t> conj;
  if (lambda.parts.empty()) return conj;
  conj.assign(lambda.parts[0], 0);
  for (std::size_t p : lambda.parts)
    for (std::size_t j = 0; j < p; ++j) ++conj[j];
  return conj;
}

Integer factorial_big(std::size_t n) {
  Integer f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= Integer(static_cast<long long>(i));
  return f;
}

}  // namespace

unsigned long long hook_dim(const Partition& lambda) {
  const std::size_t n = lambda.n();
  if (n == 0) return 1;
  auto conj = conjugate_parts(lambda);
  Integer product = 1;
  for (std::size_t i = 0; i < lambda.parts.size(); ++i)
    for (std::size_t j = 0; j < lambda.parts[i]; ++j) {
      std::size_t hook = (lambda.parts[i] - j - 1) + (conj[j] - i - 1) + 1;
      product *= Integer(static_cast<long long>(hook));
    }
  Integer dim = factorial_big(n) / product;
  return dim.convert_to<unsigned long long>();
}

namespace {

// Beta-set presentation for the Murnaghan-Nakayama recursion: removing a rim
// hook of length k moves one beta number down by k; the height is the number
// of beta numbers it jumps over.
using Beta = std::vector<std::size_t>;  // strictly decreasing

Beta beta_of(const Partition& lambda) {
  const std::size_t r = lambda.parts.size();
  Beta beta(r);
  for (std::size_t i = 0; i < r; ++i) beta[i] = lambda.parts[i] + (r - 1 - i);
  return beta;
}

Partition partition_of_beta(Beta beta) {
  std::sort(beta.rbegin(), beta.rend());
  // Strip trailing zeros of the partition (beta entries equal to the offset).
  Partition lambda;
  const std::size_t r = beta.size();
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t part = beta[i] - (r - 1 - i);
    if (part > 0) lambda.parts.push_back(part);
  }
  return lambda;
}

std::mutex mn_mutex;
std::map<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>, long long> mn_memo;

long long mn_character(const Partition& lambda, std::vector<std::size_t> type) {
  if (lambda.n() == 0) return type.empty() ? 1 : 0;
  if (type.empty()) return 0;
  auto key = std::make_pair(lambda.parts, type);
  {
    std::lock_guard<std::mutex> lock(mn_mutex);
    auto it = mn_memo.find(key);
    if (it != mn_memo.end()) return it->second;
  }
  const std::size_t k = type.front();
  std::vector<std::size_t> rest(type.begin() + 1, type.end());
  Beta beta = beta_of(lambda);
  long long total = 0;
  for (std::size_t idx = 0; idx < beta.size(); ++idx) {
    if (beta[idx] < k) continue;
    std::size_t target = beta[idx] - k;
    bool occupied = false;
    std::size_t height = 0;
    for (std::size_t j = 0; j < beta.size(); ++j) {
      if (j == idx) continue;
      if (beta[j] == target) occupied = true;
      if (beta[j] < beta[idx] && beta[j] > target) ++height;
    }
    if (occupied) continue;
    Beta next = beta;
    next[idx] = target;
    Partition smaller = partition_of_beta(next);
    long long sub = mn_character(smaller, rest);
    total += (height % 2 == 0 ? 1 : -1) * sub;
  }
  std::lock_guard<std::mutex> lock(mn_mutex);
  mn_memo[key] = total;
  return total;
}

}  // namespace

long long irreducible_character(const Partition& lambda, const Partition& cycle_type) {
  if (lambda.n() != cycle_type.n())
    throw std::invalid_argument("character: partition and cycle type sizes differ");
  return mn_character(lambda, cycle_type.parts);
}

unsigned long long class_size(const Partition& cycle_type) {
  const std::size_t n = cycle_type.n();
  Integer z = 1;
  std::map<std::size_t, std::size_t> mult;
  for (std::size_t p : cycle_type.parts) ++mult[p];
  for (const auto& [k, m] : mult) {
    for (std::size_t i = 0; i < m; ++i) z *= Integer(static_cast<long long>(k));
    z *= factorial_big(m);
  }
  Integer size = factorial_big(n) / z;
  return size.convert_to<unsigned long long>();
}

Matrix permutation_action_on_image(const LieAlgebra& l, const Subspace& image, std::size_t n,
                                   const std::vector<std::size_t>& tau) {
  const std::size_t d = l.dim();
  const std::size_t r = image.dim();
  Matrix m(r, r);
  for (std::size_t col = 0; col < r; ++col) {
    const RowVec& b = image.basis()[col];
    for (std::size_t row = 0; row < r; ++row) {
      // (tau . b)[pivot_row] = b at the slot-permuted index.
      auto [tuple, out] = EvaluationVector::decode(d, n, image.pivots()[row]);
      std::vector<std::size_t> permuted(n);
      for (std::size_t t = 0; t < n; ++t) permuted[t] = tuple[tau[t]];
      const Rational& v = b.at(EvaluationVector::flat_index(d, permuted, out));
      if (v != 0) m.set(row, col, v);
    }
  }
  return m;
}

namespace {

// Trace of the slot permutation on the image, via the RREF pivot coordinates.
Rational image_trace(const LieAlgebra& l, const Subspace& image, std::size_t n,
                     const std::vector<std::size_t>& tau) {
  const std::size_t d = l.dim();
  Rational trace;
  for (std::size_t i = 0; i < image.dim(); ++i) {
    auto [tuple, out] = EvaluationVector::decode(d, n, image.pivots()[i]);
    std::vector<std::size_t> permuted(n);
    for (std::size_t t = 0; t < n; ++t) permuted[t] = tuple[tau[t]];
    trace += image.basis()[i].at(EvaluationVector::flat_index(d, permuted, out));
  }
  return trace;
}

std::vector<std::size_t> cycle_type_representative(const Partition& mu) {
  std::vector<std::size_t> tau;
  std::size_t start = 0;
  for (std::size_t k : mu.parts) {
    for (std::size_t t = 0; t < k; ++t) tau.push_back(start + (t + 1) % k);
    start += k;
  }
  return tau;
}

}  // namespace

CocharacterReport cocharacter(const LieAlgebra& l, const ActionSpec& a, std::size_t n,
                              const CodimOptions& opts) {
  CocharacterReport report;
  report.n = n;
  report.dim_l = l.dim();
  Subspace image = l.dim() == 0 ? Subspace::zero(0) : hopf_image(l, a, n, opts);
  report.codim = image.dim();
  auto [nil, p] = l.nilradical();
  (void)nil;
  report.p_used = p;
  report.bound_constant = p * (l.dim() * p + 3);
  ExponentReport exponent = pi_exponent(l, a);
  report.d_used = exponent.d;
  report.d_exact = exponent.exactness == Exactness::Exact;
  auto mus = partitions_of(n);
  // Traces, once per cycle type.
  std::vector<Rational> traces;
  for (const auto& mu : mus) {
    if (report.codim == 0) {
      traces.push_back(Rational(0));
      continue;
    }
    traces.push_back(image_trace(l, image, n, cycle_type_representative(mu)));
  }
  // Identity trace (cycle type 1^n, the last in the listing) equals the rank.
  if (!mus.empty() && traces.back() != Rational(static_cast<long long>(report.codim)))
    throw std::logic_error("cocharacter: identity trace differs from the rank");
  Integer n_fact = factorial_big(n);
  unsigned long long weighted = 0;
  for (const auto& lambda : partitions_of(n)) {
    Rational inner;
    for (std::size_t c = 0; c < mus.size(); ++c) {
      long long chi = irreducible_character(lambda, mus[c]);
      if (chi == 0) continue;
      inner += Rational(static_cast<long long>(class_size(mus[c]))) * Rational(chi) * traces[c];
    }
    inner /= Rational(n_fact);
    if (inner == 0) continue;
    if (denominator(inner) != 1 || inner < 0)
      throw NonIntegralMultiplicity("multiplicity of " + lambda.dashed() + " is " +
                                    rational_text(inner));
    auto m = numerator(inner).convert_to<unsigned long long>();
    report.multiplicities.emplace_back(lambda, m);
    weighted += m * hook_dim(lambda);
  }
  if (weighted != report.codim)
    throw std::logic_error("cocharacter: dimension identity sum m * hook != codimension");
  std::sort(report.multiplicities.begin(), report.multiplicities.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return report;
}

std::vector<std::string> multiplicity_bound_audit(const CocharacterReport& report) {
  std::vector<std::string> violations;
  // With an inexact d the row-count test below is still sound with d = dim L
  // (the d-row threshold becomes vacuous).
  std::size_t d = report.d_exact ? report.d_used : report.dim_l;
  for (const auto& [lambda, m] : report.multiplicities) {
    if (m == 0) continue;
    if (lambda.part(d) >= report.bound_constant)
      violations.push_back("partition " + lambda.dashed() + " has lambda_{d+1} = " +
                           std::to_string(lambda.part(d)) + " >= " +
                           std::to_string(report.bound_constant));
    if (lambda.part(report.dim_l) > 0)
      violations.push_back("partition " + lambda.dashed() + " has more than dim L rows");
  }
  return violations;
}

unsigned long long colength(const CocharacterReport& report) {
  unsigned long long total = 0;
  for (const auto& [lambda, m] : report.multiplicities) total += m;
  return total;
}

std::vector<std::vector<std::size_t>> standard_tableau(const Partition& lambda) {
  std::vector<std::vector<std::size_t>> tableau;
  std::size_t next = 0;
  for (std::size_t p : lambda.parts) {
    std::vector<std::size_t> row;
    for (std::size_t j = 0; j < p; ++j) row.push_back(next++);
    tableau.push_back(std::move(row));
  }
  return tableau;
}

namespace {

// All permutations fixing each group (row or column) setwise, as full maps on
// the union of the cells; emitted with their signs.
void stabilizer_permutations(
    const std::vector<std::vector<std::size_t>>& groups, std::size_t degree,
    const std::function<void(const std::vector<std::size_t>&, int)>& fn) {
  std::vector<std::size_t> map(degree);
  for (std::size_t i = 0; i < degree; ++i) map[i] = i;
  std::function<void(std::size_t, int)> rec = [&](std::size_t gi, int sign) {
    if (gi == groups.size()) {
      fn(map, sign);
      return;
    }
    const auto& cells = groups[gi];
    std::vector<std::size_t> images = cells;
    std::sort(images.begin(), images.end());
    int base_sign = sign;
    do {
      // Parity of this arrangement relative to the sorted order.
      int inv = 0;
      for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t j = i + 1; j < images.size(); ++j)
          if (images[i] > images[j]) ++inv;
      for (std::size_t i = 0; i < cells.size(); ++i) map[cells[i]] = images[i];
      rec(gi + 1, base_sign * (inv % 2 == 0 ? 1 : -1));
    } while (std::next_permutation(images.begin(), images.end()));
    for (std::size_t i = 0; i < cells.size(); ++i) map[cells[i]] = cells[i];
  };
  rec(0, 1);
}

}  // namespace

MultilinearHPolynomial young_symmetrizer_apply(
    const std::vector<std::vector<std::size_t>>& tableau, const MultilinearHPolynomial& f) {
  std::size_t cells = 0;
  std::size_t cols = 0;
  for (const auto& row : tableau) {
    cells += row.size();
    cols = std::max(cols, row.size());
  }
  if (cells != f.degree)
    throw std::invalid_argument("young_symmetrizer_apply: tableau size differs from degree");
  std::vector<std::vector<std::size_t>> row_groups = tableau;
  std::vector<std::vector<std::size_t>> col_groups(cols);
  for (const auto& row : tableau)
    for (std::size_t j = 0; j < row.size(); ++j) col_groups[j].push_back(row[j]);
  // a_T: sum over row permutations (sign ignored); b_T: signed column sums.
  std::vector<std::vector<std::size_t>> row_maps;
  stabilizer_permutations(row_groups, f.degree,
                          [&](const std::vector<std::size_t>& m, int) { row_maps.push_back(m); });
  std::vector<std::pair<std::vector<std::size_t>, int>> col_maps;
  stabilizer_permutations(col_groups, f.degree,
                          [&](const std::vector<std::size_t>& m, int sign) {
                            col_maps.emplace_back(m, sign);
                          });
  // e*_T f = sum_{sigma in C, pi in R} sign(sigma) (sigma pi) . f, where a
  // permutation g acts on a term by renaming variables: perm[t] -> g(perm[t]).
  std::map<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>, Rational> combined;
  for (const auto& [cmap, sign] : col_maps)
    for (const auto& rmap : row_maps) {
      std::vector<std::size_t> g(f.degree);
      for (std::size_t v = 0; v < f.degree; ++v) g[v] = cmap[rmap[v]];
      for (const auto& term : f.terms) {
        std::vector<std::size_t> new_perm(f.degree);
        for (std::size_t t = 0; t < f.degree; ++t) new_perm[t] = g[term.perm[t]];
        combined[{new_perm, term.labels}] += Rational(sign) * term.coeff;
      }
    }
  MultilinearHPolynomial out;
  out.degree = f.degree;
  for (auto& [key, coeff] : combined) {
    if (coeff == 0) continue;
    out.terms.push_back({coeff, key.first, key.second});
  }
  return out;
}

}  // namespace codimlab
