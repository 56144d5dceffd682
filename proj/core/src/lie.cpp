#include "codimlab/lie.hpp"

#include "codimlab/envelope.hpp"

#include <sstream>
#include <stdexcept>

namespace codimlab {

std::string LieViolation::describe() const {
  std::ostringstream os;
  if (kind == Kind::Alternation)
    os << "alternation violated at basis pair (" << i << ", " << j << ")";
  else
    os << "Jacobi identity violated at basis triple (" << i << ", " << j << ", " << k << ")";
  return os.str();
}

LieAlgebra::LieAlgebra(std::vector<std::string> basis_names,
                       std::vector<std::vector<RowVec>> structure_constants)
    : dim_(basis_names.size()), names_(std::move(basis_names)), c_(std::move(structure_constants)) {
  if (c_.size() != dim_) throw std::invalid_argument("structure constants: wrong row count");
  for (const auto& row : c_) {
    if (row.size() != dim_) throw std::invalid_argument("structure constants: wrong col count");
    for (const auto& v : row)
      if (v.dim() != dim_) throw std::invalid_argument("structure constants: wrong vector length");
  }
}

LieAlgebra LieAlgebra::zero() { return LieAlgebra({}, {}); }

LieAlgebra LieAlgebra::abelian(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("a" + std::to_string(i + 1));
  std::vector<std::vector<RowVec>> c(dim, std::vector<RowVec>(dim, RowVec(dim)));
  return LieAlgebra(std::move(names), std::move(c));
}

RowVec LieAlgebra::bracket(const RowVec& x, const RowVec& y) const {
  RowVec out(dim_);
  x.for_each([&](std::size_t i, const Rational& xi) {
    y.for_each([&](std::size_t j, const Rational& yj) {
      if (i == j) return;
      const RowVec& cij = c_[i][j];
      if (!cij.is_zero()) out.add_scaled(cij, xi * yj);
    });
  });
  return out;
}

std::vector<LieViolation> LieAlgebra::validate() const {
  std::vector<LieViolation> violations;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!c_[i][i].is_zero())
      violations.push_back({LieViolation::Kind::Alternation, i, i, 0});
    for (std::size_t j = i + 1; j < dim_; ++j) {
      RowVec sum = c_[i][j];
      sum.add_scaled(c_[j][i], Rational(1));
      if (!sum.is_zero()) violations.push_back({LieViolation::Kind::Alternation, i, j, 0});
    }
  }
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = j + 1; k < dim_; ++k) {
        RowVec jac = bracket(c_[i][j], RowVec::unit(dim_, k));
        jac.add_scaled(bracket(c_[j][k], RowVec::unit(dim_, i)), Rational(1));
        jac.add_scaled(bracket(c_[k][i], RowVec::unit(dim_, j)), Rational(1));
        if (!jac.is_zero()) violations.push_back({LieViolation::Kind::Jacobi, i, j, k});
      }
  return violations;
}

void LieAlgebra::require_valid() const {
  auto v = validate();
  if (!v.empty()) throw std::invalid_argument("invalid Lie algebra: " + v.front().describe());
}

Matrix LieAlgebra::ad(const RowVec& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    RowVec col = bracket(x, RowVec::unit(dim_, j));
    col.for_each([&](std::size_t i, const Rational& v) { m.set(i, j, v); });
  }
  return m;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const { return ad(RowVec::unit(dim_, i)); }

Matrix LieAlgebra::killing_form() const {
  std::vector<Matrix> ads;
  ads.reserve(dim_);
  for (std::size_t i = 0; i < dim_; ++i) ads.push_back(ad_basis(i));
  Matrix k(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j) {
      Rational t = ads[i].multiply(ads[j]).trace();
      if (t != 0) {
        k.set(i, j, t);
        if (j != i) k.set(j, i, t);
      }
    }
  return k;
}

bool LieAlgebra::killing_nondegenerate() const {
  return killing_form().rank() == dim_;
}

Subspace LieAlgebra::bracket_subspaces(const Subspace& u, const Subspace& v) const {
  if (u.ambient_dim() != dim_ || v.ambient_dim() != dim_)
    throw std::invalid_argument("bracket_subspaces: ambient mismatch");
  RankAccumulator acc(dim_);
  for (const auto& a : u.basis())
    for (const auto& b : v.basis()) acc.insert(bracket(a, b));
  return acc.to_subspace();
}

Subspace LieAlgebra::derived_subalgebra() const {
  Subspace full = Subspace::full(dim_);
  return bracket_subspaces(full, full);
}

Subspace LieAlgebra::center() const {
  if (dim_ == 0) return Subspace::zero(0);
  std::vector<RowVec> rows;
  for (std::size_t j = 0; j < dim_; ++j) {
    Matrix adj = ad_basis(j);
    // [x, e_j] = -ad(e_j) x; stack the conditions ad(e_j) x = 0.
    for (std::size_t r = 0; r < dim_; ++r)
      if (!adj.row(r).is_zero()) rows.push_back(adj.row(r));
  }
  if (rows.empty()) return Subspace::full(dim_);
  return Subspace::from_matrix(Matrix::from_rows(dim_, std::move(rows)).kernel());
}

std::vector<Subspace> LieAlgebra::derived_series() const {
  std::vector<Subspace> series{Subspace::full(dim_)};
  while (true) {
    Subspace next = bracket_subspaces(series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(next);
    if (series.back().is_zero()) break;
  }
  return series;
}

std::vector<Subspace> LieAlgebra::lower_central_series() const {
  std::vector<Subspace> series{Subspace::full(dim_)};
  Subspace full = Subspace::full(dim_);
  while (true) {
    Subspace next = bracket_subspaces(series.back(), full);
    if (next == series.back()) break;
    series.push_back(next);
    if (series.back().is_zero()) break;
  }
  return series;
}

bool LieAlgebra::is_ideal(const Subspace& u) const {
  return u.contains(bracket_subspaces(Subspace::full(dim_), u));
}

bool LieAlgebra::is_subalgebra(const Subspace& u) const {
  return u.contains(bracket_subspaces(u, u));
}

bool LieAlgebra::is_abelian() const {
  return derived_subalgebra().is_zero();
}

bool LieAlgebra::is_nilpotent() const {
  return lower_central_series().back().is_zero();
}

bool LieAlgebra::is_solvable() const {
  return derived_series().back().is_zero();
}

std::size_t LieAlgebra::nilpotency_index() const {
  return nilpotency_index_of_ideal(Subspace::full(dim_));
}

std::size_t LieAlgebra::nilpotency_index_of_ideal(const Subspace& u) const {
  // Least p with every left-normed product of p elements of U zero:
  // P_1 = U, P_{k+1} = [P_k, U].
  Subspace power = u;
  std::size_t p = 1;
  while (!power.is_zero()) {
    Subspace next = bracket_subspaces(power, u);
    if (next == power)
      throw std::invalid_argument("nilpotency_index: not nilpotent");
    power = next;
    ++p;
  }
  return p;
}

Subspace LieAlgebra::solvable_radical() const {
  if (dim_ == 0) return Subspace::zero(0);
  Subspace derived = derived_subalgebra();
  Subspace radical(dim_);
  if (derived.is_zero()) {
    radical = Subspace::full(dim_);
  } else {
    // {x : K(x, d) = 0 for all d in [L,L]}
    Matrix k = killing_form();
    Matrix conditions = derived.basis_matrix().multiply(k);
    radical = Subspace::from_matrix(conditions.kernel());
  }
  if (!is_ideal(radical)) throw std::logic_error("solvable_radical: result is not an ideal");
  LieAlgebra r = restrict_to(radical);
  if (!r.is_solvable()) throw std::logic_error("solvable_radical: result is not solvable");
  return radical;
}

std::pair<Subspace, std::size_t> LieAlgebra::nilradical() const {
  Subspace radical = solvable_radical();
  Subspace nil(dim_);
  if (radical.is_zero()) {
    nil = Subspace::zero(dim_);
  } else {
    // N = {x in R : ad x lies in the radical of the envelope of ad(R)}.
    ModuleAction ad_r{dim_, {}};
    for (const auto& row : radical.basis()) ad_r.generators.push_back(ad(row));
    Envelope env(ad_r);
    auto rad_basis = env.radical_basis();
    RankAccumulator rad_span(dim_ * dim_);
    for (const auto& m : rad_basis) {
      std::vector<std::pair<std::size_t, Rational>> entries;
      for (std::size_t i = 0; i < dim_; ++i)
        m.row(i).for_each([&](std::size_t j, const Rational& v) {
          entries.emplace_back(i * dim_ + j, v);
        });
      rad_span.insert(RowVec::from_entries(dim_ * dim_, std::move(entries)));
    }
    Subspace rad_sub = rad_span.to_subspace();
    // Linear condition: x = sum t_a r_a with flatten(ad x) in rad_sub.
    const auto& rbasis = radical.basis();
    const std::size_t t = rbasis.size();
    std::vector<RowVec> flat_ads;
    for (const auto& r : rbasis) {
      Matrix m = ad(r);
      std::vector<std::pair<std::size_t, Rational>> entries;
      for (std::size_t i = 0; i < dim_; ++i)
        m.row(i).for_each([&](std::size_t j, const Rational& v) {
          entries.emplace_back(i * dim_ + j, v);
        });
      flat_ads.push_back(RowVec::from_entries(dim_ * dim_, std::move(entries)));
    }
    // Reduce each flat ad modulo rad_sub; the condition is that the
    // combination of remainders vanishes.
    std::vector<RowVec> remainders;
    for (auto& fa : flat_ads) remainders.push_back(rad_sub.reduce(fa));
    Matrix system(dim_ * dim_, t);
    for (std::size_t a = 0; a < t; ++a)
      remainders[a].for_each([&](std::size_t idx, const Rational& v) { system.set(idx, a, v); });
    Matrix null = system.kernel();
    std::vector<RowVec> gens;
    for (std::size_t kk = 0; kk < null.rows(); ++kk) {
      RowVec x(dim_);
      null.row(kk).for_each([&](std::size_t a, const Rational& v) {
        x.add_scaled(rbasis[a], v);
      });
      gens.push_back(std::move(x));
    }
    nil = Subspace::span(dim_, gens);
  }
  // Postconditions: nilpotent ideal, contains [L, R], inside R.
  if (!is_ideal(nil)) throw std::logic_error("nilradical: not an ideal");
  if (!radical.contains(nil)) throw std::logic_error("nilradical: not inside the radical");
  Subspace lr = bracket_subspaces(Subspace::full(dim_), radical);
  if (!nil.contains(lr)) throw std::logic_error("nilradical: misses [L, R]");
  std::size_t p = nilpotency_index_of_ideal(nil);
  return {nil, p};
}

namespace {

// Complement representatives of `inner` inside `outer`: rows of `outer`'s
// canonical basis that enlarge `inner`, in order.
std::vector<RowVec> complement_reps(const Subspace& outer, const Subspace& inner) {
  RankAccumulator acc(outer.ambient_dim());
  for (const auto& r : inner.basis()) acc.insert(r);
  std::vector<RowVec> reps;
  for (const auto& r : outer.basis())
    if (acc.insert(r)) reps.push_back(r);
  return reps;
}

}  // namespace

std::pair<Subspace, Subspace> LieAlgebra::levi_decomposition() const {
  Subspace radical = solvable_radical();
  auto [nil, p] = nilradical();
  (void)p;
  Subspace levi(dim_);
  if (radical.dim() == dim_) {
    levi = Subspace::zero(dim_);
  } else if (radical.is_zero()) {
    levi = Subspace::full(dim_);
  } else {
    // Lift a complement of R along the derived series of R.  The quotient
    // structure constants are fixed once; corrections are solved stage by
    // stage (Whitehead's lemma guarantees solvability in characteristic 0).
    Matrix section;
    LieAlgebra quot = quotient(radical, &section);
    const std::size_t b = quot.dim();
    std::vector<RowVec> reps;  // current lifted basis, reps[t] projects to e_t
    for (std::size_t tt = 0; tt < b; ++tt) reps.push_back(section.row(tt));
    LieAlgebra rad_alg = restrict_to(radical);
    std::vector<Subspace> rad_derived = rad_alg.derived_series();
    // Express the derived series of R back in L coordinates.
    std::vector<Subspace> d_series;
    for (const auto& ds : rad_derived) {
      std::vector<RowVec> rows;
      for (const auto& row : ds.basis()) {
        RowVec lifted(dim_);
        row.for_each([&](std::size_t a, const Rational& v) {
          lifted.add_scaled(radical.basis()[a], v);
        });
        rows.push_back(std::move(lifted));
      }
      d_series.push_back(Subspace::span(dim_, rows));
    }
    if (!d_series.back().is_zero())
      throw LeviLiftFailed("levi_decomposition: radical derived series does not vanish");
    for (std::size_t stage = 0; stage + 1 < d_series.size(); ++stage) {
      const Subspace& d_cur = d_series[stage];
      const Subspace& d_next = d_series[stage + 1];
      if (d_cur.is_zero()) break;
      const auto& dbasis = d_cur.basis();
      const std::size_t dd = dbasis.size();
      // Unknowns: corrections r_t = sum_a u[t*dd + a] dbasis[a].
      // Equations, for each pair (s < t), in coordinates modulo d_next:
      // [v_s, r_t] + [r_s, v_t] - sum_u gamma_st^u r_u = -(defect_st)
      std::vector<RowVec> eq_rows;
      std::vector<Rational> eq_rhs;
      for (std::size_t s = 0; s < b; ++s)
        for (std::size_t tt = s + 1; tt < b; ++tt) {
          RowVec gamma = quot.bracket_basis(s, tt);
          RowVec defect = bracket(reps[s], reps[tt]);
          gamma.for_each([&](std::size_t u, const Rational& v) {
            defect.add_scaled(reps[u], -v);
          });
          RowVec defect_red = d_next.reduce(defect);
          // Row per ambient coordinate of the reduced equation.
          std::vector<RowVec> coeff(dim_, RowVec(b * dd));
          auto add_term = [&](std::size_t var_t, const RowVec& mult, const Rational& sign) {
            // contribution sign * [mult, dbasis[a]] to variable (var_t, a)
            for (std::size_t a = 0; a < dd; ++a) {
              RowVec term = bracket(mult, dbasis[a]);
              term = d_next.reduce(term);
              term.for_each([&](std::size_t coord, const Rational& v) {
                coeff[coord].set(var_t * dd + a,
                                 coeff[coord].at(var_t * dd + a) + sign * v);
              });
            }
          };
          add_term(tt, reps[s], Rational(1));    // [v_s, r_t]
          add_term(s, reps[tt], Rational(-1));   // [r_s, v_t] = -[v_t, r_s]
          gamma.for_each([&](std::size_t u, const Rational& gu) {
            for (std::size_t a = 0; a < dd; ++a) {
              RowVec term = d_next.reduce(dbasis[a]);
              term.for_each([&](std::size_t coord, const Rational& v) {
                coeff[coord].set(u * dd + a, coeff[coord].at(u * dd + a) - gu * v);
              });
            }
          });
          for (std::size_t coord = 0; coord < dim_; ++coord) {
            if (coeff[coord].is_zero() && defect_red.at(coord) == 0) continue;
            eq_rows.push_back(coeff[coord]);
            eq_rhs.push_back(-defect_red.at(coord));
          }
        }
      if (!eq_rows.empty()) {
        Matrix system = Matrix::from_rows(b * dd, eq_rows);
        RowVec rhs(eq_rows.size());
        for (std::size_t r = 0; r < eq_rhs.size(); ++r)
          if (eq_rhs[r] != 0) rhs.set(r, eq_rhs[r]);
        auto sol = solve_linear(system, rhs);
        if (!sol) throw LeviLiftFailed("levi_decomposition: correction system unsolvable");
        for (std::size_t tt = 0; tt < b; ++tt)
          for (std::size_t a = 0; a < dd; ++a) {
            const Rational& u = sol->at(tt * dd + a);
            if (u != 0) reps[tt].add_scaled(dbasis[a], u);
          }
      }
    }
    levi = Subspace::span(dim_, reps);
  }
  // S: complement of N in R with [B, S] = 0, solved coordinatewise.
  Subspace s_space(dim_);
  if (radical == nil) {
    s_space = Subspace::zero(dim_);
  } else {
    auto reps = complement_reps(radical, nil);
    const auto& nbasis = nil.basis();
    std::vector<RowVec> s_gens;
    for (const auto& u : reps) {
      if (nbasis.empty()) {
        s_gens.push_back(u);
        continue;
      }
      // Find w in N with [b_j, u + w] = 0 for the Levi basis.
      std::vector<RowVec> rows;
      std::vector<Rational> rhs_vals;
      for (const auto& bvec : levi.basis()) {
        RowVec target = bracket(bvec, u);  // must be cancelled
        for (std::size_t coord = 0; coord < dim_; ++coord) {
          RowVec row(nbasis.size());
          for (std::size_t a = 0; a < nbasis.size(); ++a) {
            Rational v = bracket(bvec, nbasis[a]).at(coord);
            if (v != 0) row.set(a, v);
          }
          if (row.is_zero() && target.at(coord) == 0) continue;
          rows.push_back(row);
          rhs_vals.push_back(-target.at(coord));
        }
      }
      RowVec w(dim_);
      if (!rows.empty()) {
        Matrix system = Matrix::from_rows(nbasis.size(), rows);
        RowVec rhs(rows.size());
        for (std::size_t r = 0; r < rhs_vals.size(); ++r)
          if (rhs_vals[r] != 0) rhs.set(r, rhs_vals[r]);
        auto sol = solve_linear(system, rhs);
        if (!sol) throw LeviLiftFailed("levi_decomposition: no centralizing complement S");
        for (std::size_t a = 0; a < nbasis.size(); ++a) {
          const Rational& v = sol->at(a);
          if (v != 0) w.add_scaled(nbasis[a], v);
        }
      }
      RowVec s_vec = u;
      s_vec.add_scaled(w, Rational(1));
      s_gens.push_back(std::move(s_vec));
    }
    s_space = Subspace::span(dim_, s_gens);
  }
  // Machine checks (per call): B a subalgebra, B ⊕ R = L, restricted Killing
  // form of B nondegenerate, R = S ⊕ N, [B, S] = 0.
  if (!is_subalgebra(levi)) throw LeviLiftFailed("levi_decomposition: B is not a subalgebra");
  if (levi.dim() + radical.dim() != dim_ || !levi.intersect(radical).is_zero() ||
      levi.sum(radical).dim() != dim_)
    throw LeviLiftFailed("levi_decomposition: B ⊕ R != L");
  if (levi.dim() > 0) {
    Matrix k = killing_form();
    Matrix bmat = levi.basis_matrix();
    Matrix restricted = bmat.multiply(k).multiply(bmat.transpose());
    if (restricted.rank() != levi.dim())
      throw LeviLiftFailed("levi_decomposition: restricted Killing form degenerate");
  }
  if (s_space.sum(nil) != radical || !s_space.intersect(nil).is_zero())
    throw LeviLiftFailed("levi_decomposition: R != S ⊕ N");
  if (!bracket_subspaces(levi, s_space).is_zero())
    throw LeviLiftFailed("levi_decomposition: [B, S] != 0");
  return {levi, s_space};
}

Subspace LieAlgebra::annihilator(const Subspace& outer, const Subspace& inner) const {
  if (!outer.contains(inner)) throw NotNested("annihilator: J is not contained in I");
  if (outer.is_zero()) return Subspace::full(dim_);
  // {x : [x, I] ⊆ J}: stack the conditions over I's basis in coordinates
  // modulo J.
  std::vector<RowVec> rows;
  for (const auto& u : outer.basis()) {
    std::vector<RowVec> images;  // images[j] = [e_j, u] mod J
    images.reserve(dim_);
    for (std::size_t j = 0; j < dim_; ++j)
      images.push_back(inner.reduce(bracket(RowVec::unit(dim_, j), u)));
    for (std::size_t coord = 0; coord < dim_; ++coord) {
      RowVec row(dim_);
      for (std::size_t j = 0; j < dim_; ++j) {
        const Rational& v = images[j].at(coord);
        if (v != 0) row.set(j, v);
      }
      if (!row.is_zero()) rows.push_back(std::move(row));
    }
  }
  Subspace ann = rows.empty()
                     ? Subspace::full(dim_)
                     : Subspace::from_matrix(Matrix::from_rows(dim_, std::move(rows)).kernel());
  if (!is_ideal(ann)) throw std::logic_error("annihilator: result is not an ideal");
  return ann;
}

LieAlgebra LieAlgebra::direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  std::size_t n = a.dim_ + b.dim_;
  std::vector<std::string> names;
  for (const auto& s : a.names_) names.push_back(s + "#1");
  for (const auto& s : b.names_) names.push_back(s + "#2");
  std::vector<std::vector<RowVec>> c(n, std::vector<RowVec>(n, RowVec(n)));
  for (std::size_t i = 0; i < a.dim_; ++i)
    for (std::size_t j = 0; j < a.dim_; ++j) {
      std::vector<std::pair<std::size_t, Rational>> entries;
      a.c_[i][j].for_each([&](std::size_t k, const Rational& v) { entries.emplace_back(k, v); });
      c[i][j] = RowVec::from_entries(n, std::move(entries));
    }
  for (std::size_t i = 0; i < b.dim_; ++i)
    for (std::size_t j = 0; j < b.dim_; ++j) {
      std::vector<std::pair<std::size_t, Rational>> entries;
      b.c_[i][j].for_each(
          [&](std::size_t k, const Rational& v) { entries.emplace_back(a.dim_ + k, v); });
      c[a.dim_ + i][a.dim_ + j] = RowVec::from_entries(n, std::move(entries));
    }
  return LieAlgebra(std::move(names), std::move(c));
}

LieAlgebra LieAlgebra::quotient(const Subspace& ideal, Matrix* section, Matrix* projection) const {
  if (!is_ideal(ideal)) throw std::invalid_argument("quotient: subspace is not an ideal");
  auto free_coords = ideal.complement_coordinates();
  const std::size_t m = free_coords.size();
  auto project = [&](const RowVec& v) {
    RowVec reduced = ideal.reduce(v);
    RowVec out(m);
    for (std::size_t t = 0; t < m; ++t) {
      const Rational& val = reduced.at(free_coords[t]);
      if (val != 0) out.set(t, val);
    }
    return out;
  };
  std::vector<std::string> names;
  for (std::size_t t = 0; t < m; ++t) names.push_back(names_[free_coords[t]] + "~");
  std::vector<std::vector<RowVec>> c(m, std::vector<RowVec>(m, RowVec(m)));
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < m; ++t)
      c[s][t] = project(c_[free_coords[s]][free_coords[t]]);
  if (section) {
    *section = Matrix(m, dim_);
    for (std::size_t t = 0; t < m; ++t) section->set(t, free_coords[t], Rational(1));
  }
  if (projection) {
    *projection = Matrix(m, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      RowVec col = project(RowVec::unit(dim_, j));
      col.for_each([&](std::size_t t, const Rational& v) { projection->set(t, j, v); });
    }
  }
  return LieAlgebra(std::move(names), std::move(c));
}

LieAlgebra LieAlgebra::subalgebra_on_basis(const std::vector<std::size_t>& indices) const {
  const std::size_t m = indices.size();
  std::vector<std::size_t> position(dim_, dim_);
  for (std::size_t t = 0; t < m; ++t) position[indices[t]] = t;
  std::vector<std::string> names;
  for (std::size_t t = 0; t < m; ++t) names.push_back(names_[indices[t]]);
  std::vector<std::vector<RowVec>> c(m, std::vector<RowVec>(m, RowVec(m)));
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < m; ++t) {
      std::vector<std::pair<std::size_t, Rational>> entries;
      bool closed = true;
      c_[indices[s]][indices[t]].for_each([&](std::size_t k, const Rational& v) {
        if (position[k] == dim_)
          closed = false;
        else
          entries.emplace_back(position[k], v);
      });
      if (!closed)
        throw std::invalid_argument("subalgebra_on_basis: span is not closed under brackets");
      c[s][t] = RowVec::from_entries(m, std::move(entries));
    }
  return LieAlgebra(std::move(names), std::move(c));
}

LieAlgebra LieAlgebra::restrict_to(const Subspace& sub, Matrix* section) const {
  if (!is_subalgebra(sub)) throw std::invalid_argument("restrict_to: not a subalgebra");
  const auto& rows = sub.basis();
  const std::size_t m = rows.size();
  std::vector<std::string> names;
  for (std::size_t t = 0; t < m; ++t) names.push_back("s" + std::to_string(t + 1));
  std::vector<std::vector<RowVec>> c(m, std::vector<RowVec>(m, RowVec(m)));
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < m; ++t) {
      auto coords = sub.coordinates(bracket(rows[s], rows[t]));
      if (!coords) throw std::logic_error("restrict_to: bracket left the subalgebra");
      c[s][t] = std::move(*coords);
    }
  if (section) *section = sub.basis_matrix();
  return LieAlgebra(std::move(names), std::move(c));
}

StructureReport LieAlgebra::structure_report() const {
  StructureReport report;
  report.center = center();
  report.derived_series = derived_series();
  report.lower_central_series = lower_central_series();
  report.solvable_radical = solvable_radical();
  auto [nil, p] = nilradical();
  report.nilradical = nil;
  report.nilpotency_index = p;
  auto [levi, s] = levi_decomposition();
  report.levi = levi;
  report.levi_complement = s;
  return report;
}

}  // namespace codimlab
