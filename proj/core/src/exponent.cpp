#include "codimlab/exponent.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace codimlab {

namespace {

std::vector<RowVec> complement_reps(const Subspace& outer, const Subspace& inner) {
  RankAccumulator acc(outer.ambient_dim());
  for (const auto& r : inner.basis()) acc.insert(r);
  std::vector<RowVec> reps;
  for (const auto& r : outer.basis())
    if (acc.insert(r)) reps.push_back(r);
  return reps;
}

// Coordinates of v (in outer) on the reps modulo inner.
RowVec factor_coords(const Subspace& inner, const std::vector<RowVec>& reps, const RowVec& v) {
  const std::size_t d = v.dim();
  Matrix system(d, inner.dim() + reps.size());
  for (std::size_t c = 0; c < inner.dim(); ++c)
    inner.basis()[c].for_each([&](std::size_t row, const Rational& val) {
      system.set(row, c, val);
    });
  for (std::size_t c = 0; c < reps.size(); ++c)
    reps[c].for_each([&](std::size_t row, const Rational& val) {
      system.set(row, inner.dim() + c, val);
    });
  auto sol = solve_linear(system, v);
  if (!sol) throw std::logic_error("factor_coords: vector outside the span");
  RowVec out(reps.size());
  for (std::size_t c = 0; c < reps.size(); ++c) {
    const Rational& x = sol->at(inner.dim() + c);
    if (x != 0) out.set(c, x);
  }
  return out;
}

std::vector<Matrix> module_generators(const LieAlgebra& l, const ActionSpec& a) {
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < l.dim(); ++i) gens.push_back(l.ad_basis(i));
  for (const auto& op : a.operators) gens.push_back(op);
  return gens;
}

}  // namespace

ChainFactor make_chain_factor(const LieAlgebra& l, const ActionSpec& a, const Subspace& outer,
                              const Subspace& inner) {
  ChainFactor factor{outer, inner, {}, {}, Subspace::zero(l.dim()), true};
  factor.reps = complement_reps(outer, inner);
  const std::size_t f = factor.reps.size();
  factor.module.dim = f;
  for (const auto& g : module_generators(l, a)) {
    Matrix m(f, f);
    for (std::size_t t = 0; t < f; ++t) {
      RowVec image = g.apply(factor.reps[t]);
      RowVec coords = factor_coords(inner, factor.reps, image);
      coords.for_each([&](std::size_t row, const Rational& v) { m.set(row, t, v); });
    }
    factor.module.generators.push_back(std::move(m));
  }
  factor.annihilator = l.annihilator(outer, inner);
  return factor;
}

namespace {

// Refines the segment (outer, inner) of the chain into irreducible factors,
// appending the intermediate ideals (strictly between inner and outer, outer
// excluded) to `out` from the top down.
void refine_segment(const LieAlgebra& l, const ActionSpec& a, const Subspace& outer,
                    const Subspace& inner, std::vector<Subspace>& out, bool& split_certified) {
  if (outer.dim() == inner.dim()) return;
  ChainFactor factor = make_chain_factor(l, a, outer, inner);
  auto analysis = analyze_module(factor.module);
  if (analysis.verdict == ModuleVerdict::Irreducible) return;
  if (analysis.verdict == ModuleVerdict::NonSplit) {
    split_certified = false;  // kept as a chain factor, flagged
    return;
  }
  // Pull the proper submodule back to an ideal strictly between.
  const Subspace& sub = *analysis.proper_submodule;
  std::vector<RowVec> gens;
  for (const auto& row : sub.basis()) {
    RowVec lifted(l.dim());
    row.for_each([&](std::size_t t, const Rational& v) {
      lifted.add_scaled(factor.reps[t], v);
    });
    gens.push_back(std::move(lifted));
  }
  Subspace middle = inner;
  for (const auto& g : gens) middle = middle.sum(Subspace::span(l.dim(), {g}));
  if (middle.dim() <= inner.dim() || middle.dim() >= outer.dim())
    throw std::logic_error("refine_segment: pulled-back submodule is not proper");
  refine_segment(l, a, outer, middle, out, split_certified);
  out.push_back(middle);
  refine_segment(l, a, middle, inner, out, split_certified);
}

}  // namespace

CompositionChain composition_chain(const LieAlgebra& l, const ActionSpec& a) {
  CompositionChain chain;
  const std::size_t d = l.dim();
  Subspace full = Subspace::full(d);
  Subspace radical = l.solvable_radical();
  auto [nil, p] = l.nilradical();
  (void)p;
  if (!invariant(a, radical))
    throw NotHNiceDetected("the solvable radical is not invariant under the action");
  if (!invariant(a, nil))
    throw NotHNiceDetected("the nilpotent radical is not invariant under the action");
  std::vector<Subspace> anchors{full};
  for (const auto& s : {radical, nil, Subspace::zero(d)})
    if (s.dim() < anchors.back().dim()) anchors.push_back(s);
  chain.ideals.push_back(full);
  for (std::size_t seg = 0; seg + 1 < anchors.size(); ++seg) {
    std::vector<Subspace> between;
    refine_segment(l, a, anchors[seg], anchors[seg + 1], between, chain.split_certified);
    for (auto& s : between) chain.ideals.push_back(std::move(s));
    chain.ideals.push_back(anchors[seg + 1]);
  }
  if (d == 0) chain.ideals = {Subspace::zero(0)};
  for (std::size_t i = 0; i + 1 < chain.ideals.size(); ++i) {
    ChainFactor factor = make_chain_factor(l, a, chain.ideals[i], chain.ideals[i + 1]);
    auto analysis = analyze_module(factor.module);
    factor.split_certified = analysis.verdict == ModuleVerdict::Irreducible;
    if (analysis.verdict == ModuleVerdict::Reducible)
      throw std::logic_error("composition_chain: factor is reducible after refinement");
    chain.factors.push_back(std::move(factor));
  }
  return chain;
}

Subspace levi_for_action(const LieAlgebra& l, const ActionSpec& a) {
  auto [levi, s] = l.levi_decomposition();
  (void)s;
  if (invariant(a, levi)) return levi;
  if (a.origin != ActionOrigin::GroupAlgebra && a.origin != ActionOrigin::DualGroupAlgebra)
    throw NotHNiceDetected("computed Levi subalgebra is not invariant under the action");
  // Reynolds averaging of the projection onto B along R.
  Subspace radical = l.solvable_radical();
  const std::size_t d = l.dim();
  // P: projection onto levi along radical.
  Matrix basis_cols(d, d);
  for (std::size_t c = 0; c < levi.dim(); ++c)
    levi.basis()[c].for_each([&](std::size_t r, const Rational& v) { basis_cols.set(r, c, v); });
  for (std::size_t c = 0; c < radical.dim(); ++c)
    radical.basis()[c].for_each(
        [&](std::size_t r, const Rational& v) { basis_cols.set(r, levi.dim() + c, v); });
  Matrix projector(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    auto sol = solve_linear(basis_cols, RowVec::unit(d, j));
    if (!sol) throw std::logic_error("levi_for_action: basis change failed");
    RowVec image(d);
    for (std::size_t c = 0; c < levi.dim(); ++c) {
      const Rational& x = sol->at(c);
      if (x != 0) image.add_scaled(levi.basis()[c], x);
    }
    image.for_each([&](std::size_t r, const Rational& v) { projector.set(r, j, v); });
  }
  Matrix averaged(d, d);
  if (a.origin == ActionOrigin::GroupAlgebra) {
    for (const auto& op : a.operators) {
      // op^{-1} by exact solving, column by column.
      Matrix inv(d, d);
      for (std::size_t j = 0; j < d; ++j) {
        auto sol = solve_linear(op, RowVec::unit(d, j));
        if (!sol) throw NotHNiceDetected("group operator is singular");
        sol->for_each([&](std::size_t r, const Rational& v) { inv.set(r, j, v); });
      }
      averaged = averaged.plus(op.multiply(projector).multiply(inv));
    }
    averaged = averaged.scaled(Rational(1) / Rational(static_cast<long long>(a.operators.size())));
  } else {
    // Dual group algebra: the degree-zero block of P in the induced grading.
    for (const auto& op : a.operators) averaged = averaged.plus(op.multiply(projector).multiply(op));
  }
  std::vector<RowVec> gens;
  for (std::size_t j = 0; j < d; ++j) {
    RowVec col(d);
    for (std::size_t r = 0; r < d; ++r) {
      const Rational& v = averaged.at(r, j);
      if (v != 0) col.set(r, v);
    }
    gens.push_back(std::move(col));
  }
  Subspace candidate = Subspace::span(d, gens);
  if (candidate.dim() + radical.dim() != d || !candidate.intersect(radical).is_zero() ||
      !l.is_subalgebra(candidate) || !invariant(a, candidate))
    throw NotHNiceDetected("averaged Levi retry failed its postconditions");
  return candidate;
}

std::optional<Subspace> invariant_complement(const LieAlgebra& l, const ActionSpec& a,
                                             const Subspace& levi, const Subspace& outer,
                                             const Subspace& inner) {
  const std::size_t d = l.dim();
  std::vector<RowVec> reps = complement_reps(outer, inner);
  const std::size_t f = reps.size();
  if (f == 0) return Subspace::zero(d);
  // Generators whose stability defines the complement: ad of the Levi basis
  // and every Hopf operator.
  std::vector<Matrix> gens;
  for (const auto& b : levi.basis()) gens.push_back(l.ad(b));
  for (const auto& op : a.operators) gens.push_back(op);
  // Factor matrices of the generators.
  std::vector<Matrix> factor_gens;
  for (const auto& g : gens) {
    Matrix m(f, f);
    for (std::size_t t = 0; t < f; ++t) {
      RowVec coords = factor_coords(inner, reps, g.apply(reps[t]));
      coords.for_each([&](std::size_t row, const Rational& v) { m.set(row, t, v); });
    }
    factor_gens.push_back(std::move(m));
  }
  // Unknown splitting φ: factor -> outer, parametrized on outer's basis:
  // φ(e_t) = Σ_c Φ(c, t) outer_basis[c].  Conditions:
  //   (1) factor_coords(φ(e_t)) = e_t          (π φ = id)
  //   (2) φ(G_M e_t) = G φ(e_t) for each generator G.
  const std::size_t ob = outer.dim();
  const std::size_t unknowns = ob * f;  // Φ(c, t) at index c * f + t
  std::vector<RowVec> rows;
  std::vector<Rational> rhs_vals;
  // Precompute factor coordinates of the outer basis.
  std::vector<RowVec> outer_coords;
  for (std::size_t c = 0; c < ob; ++c)
    outer_coords.push_back(factor_coords(inner, reps, outer.basis()[c]));
  for (std::size_t t = 0; t < f; ++t)
    for (std::size_t u = 0; u < f; ++u) {
      RowVec row(unknowns);
      for (std::size_t c = 0; c < ob; ++c) {
        const Rational& v = outer_coords[c].at(u);
        if (v != 0) row.set(c * f + t, v);
      }
      rows.push_back(std::move(row));
      rhs_vals.push_back(t == u ? Rational(1) : Rational(0));
    }
  // Equivariance rows, in ambient coordinates.
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const Matrix& big = gens[gi];
    const Matrix& small = factor_gens[gi];
    // Images of the outer basis under the big generator.
    std::vector<RowVec> big_images;
    for (std::size_t c = 0; c < ob; ++c) big_images.push_back(big.apply(outer.basis()[c]));
    for (std::size_t t = 0; t < f; ++t) {
      // φ(small e_t) - big φ(e_t) = 0, coordinates in the ambient space.
      for (std::size_t coord = 0; coord < d; ++coord) {
        RowVec row(unknowns);
        // φ(small e_t) = Σ_u small(u, t) Σ_c Φ(c, u) outer_basis[c]
        for (std::size_t u = 0; u < f; ++u) {
          const Rational& s = small.at(u, t);
          if (s == 0) continue;
          for (std::size_t c = 0; c < ob; ++c) {
            const Rational& v = outer.basis()[c].at(coord);
            if (v != 0) row.set(c * f + u, row.at(c * f + u) + s * v);
          }
        }
        // big φ(e_t) = Σ_c Φ(c, t) big(outer_basis[c])
        for (std::size_t c = 0; c < ob; ++c) {
          const Rational& v = big_images[c].at(coord);
          if (v != 0) row.set(c * f + t, row.at(c * f + t) - v);
        }
        if (!row.is_zero()) {
          rows.push_back(std::move(row));
          rhs_vals.push_back(Rational(0));
        }
      }
    }
  }
  Matrix system = Matrix::from_rows(unknowns, rows);
  RowVec rhs(rows.size());
  for (std::size_t r = 0; r < rhs_vals.size(); ++r)
    if (rhs_vals[r] != 0) rhs.set(r, rhs_vals[r]);
  auto sol = solve_linear(system, rhs);
  if (!sol) return std::nullopt;
  std::vector<RowVec> t_gens;
  for (std::size_t t = 0; t < f; ++t) {
    RowVec vec(d);
    for (std::size_t c = 0; c < ob; ++c) {
      const Rational& x = sol->at(c * f + t);
      if (x != 0) vec.add_scaled(outer.basis()[c], x);
    }
    t_gens.push_back(std::move(vec));
  }
  Subspace t_space = Subspace::span(d, t_gens);
  if (t_space.dim() != f || !t_space.intersect(inner).is_zero() ||
      t_space.sum(inner) != outer)
    return std::nullopt;
  return t_space;
}

namespace {

struct Trajectory {
  std::vector<Subspace> states;  // distinct states in order of first visit
  bool cycled = false;
};

Trajectory subspace_trajectory(const LieAlgebra& l, const Subspace& start, std::size_t q_bound) {
  Trajectory traj;
  std::map<Subspace, std::size_t> seen;
  Subspace current = start;
  Subspace full = Subspace::full(l.dim());
  for (std::size_t q = 0; q <= q_bound; ++q) {
    if (seen.count(current)) {
      traj.cycled = true;
      return traj;
    }
    seen[current] = traj.states.size();
    traj.states.push_back(current);
    current = l.bracket_subspaces(current, full);
  }
  return traj;  // cycled stays false: bound exhausted
}

}  // namespace

Condition2Result condition2_check(const LieAlgebra& l,
                                  const std::vector<Subspace>& complements,
                                  std::size_t q_bound) {
  if (q_bound == 0) q_bound = 4 * l.dim() * l.dim() + 4;
  Condition2Result result;
  result.bound = q_bound;
  std::vector<Trajectory> trajectories;
  for (const auto& t : complements) {
    trajectories.push_back(subspace_trajectory(l, t, q_bound));
    if (!trajectories.back().cycled) {
      result.exhausted = true;
      return result;
    }
  }
  const std::size_t r = complements.size();
  if (r == 0) {
    result.satisfiable = true;
    return result;
  }
  // Search state choices in order of increasing total power.
  std::size_t max_states = 0;
  for (const auto& t : trajectories) max_states = std::max(max_states, t.states.size());
  std::vector<std::size_t> choice(r, 0);
  std::size_t max_total = 0;
  for (const auto& t : trajectories) max_total += t.states.size() - 1;
  for (std::size_t total = 0; total <= max_total; ++total) {
    // Enumerate compositions of `total` into r powers within range.
    std::function<bool(std::size_t, std::size_t, Subspace)> rec =
        [&](std::size_t k, std::size_t left, Subspace current) -> bool {
      if (k == r) {
        if (left != 0) return false;
        return !current.is_zero();
      }
      for (std::size_t q = 0; q <= left && q < trajectories[k].states.size(); ++q) {
        const Subspace& state = trajectories[k].states[q];
        Subspace next = k == 0 ? state : l.bracket_subspaces(current, state);
        if (next.is_zero() && k + 1 < r) continue;  // deeper brackets stay zero
        choice[k] = q;
        if (rec(k + 1, left - q, next)) return true;
      }
      return false;
    };
    if (rec(0, total, Subspace::zero(l.dim()))) {
      result.satisfiable = true;
      result.powers = choice;
      return result;
    }
  }
  return result;
}

std::variant<std::size_t, std::vector<std::string>> check_certificate(
    const LieAlgebra& l, const ActionSpec& a, const ExponentCertificate& cert,
    const ExponentOptions& opts) {
  std::vector<std::string> reasons;
  const std::size_t r = cert.pairs.size();
  if (cert.complements.size() != r || cert.powers.size() != r)
    reasons.push_back("pairs, complements and powers must have equal length");
  if (!reasons.empty()) return reasons;
  if (r == 0) return std::size_t{0};  // empty intersection is L, d = 0
  Subspace levi(l.dim());
  bool have_levi = false;
  try {
    levi = levi_for_action(l, a);
    have_levi = true;
  } catch (const NotHNiceDetected& e) {
    reasons.push_back(std::string("no invariant Levi subalgebra: ") + e.what());
  }
  Subspace ann_meet = Subspace::full(l.dim());
  for (std::size_t k = 0; k < r; ++k) {
    const auto& [outer, inner] = cert.pairs[k];
    std::string tag = "pair " + std::to_string(k + 1) + ": ";
    if (!outer.contains(inner)) {
      reasons.push_back(tag + "J is not contained in I");
      continue;
    }
    if (!l.is_ideal(outer)) reasons.push_back(tag + "I is not an ideal");
    if (!l.is_ideal(inner)) reasons.push_back(tag + "J is not an ideal");
    if (!invariant(a, outer)) reasons.push_back(tag + "I is not H-invariant");
    if (!invariant(a, inner)) reasons.push_back(tag + "J is not H-invariant");
    if (outer.dim() == inner.dim()) {
      reasons.push_back(tag + "factor is zero");
      continue;
    }
    ChainFactor factor = make_chain_factor(l, a, outer, inner);
    auto analysis = analyze_module(factor.module);
    if (analysis.verdict == ModuleVerdict::Reducible)
      reasons.push_back(tag + "factor I/J is a reducible (H,L)-module");
    else if (analysis.verdict == ModuleVerdict::NonSplit)
      reasons.push_back(tag +
                        "factor irreducibility is not certified over Q (commutant dimension " +
                        std::to_string(analysis.commutant_dim) + ")");
    const Subspace& t = cert.complements[k];
    if (t.sum(inner) != outer || !t.intersect(inner).is_zero())
      reasons.push_back(tag + "T is not a complement of J in I");
    if (!invariant(a, t)) reasons.push_back(tag + "T is not H-invariant");
    if (have_levi && !t.contains(l.bracket_subspaces(levi, t)))
      reasons.push_back(tag + "T is not stable under the Levi subalgebra");
    ann_meet = ann_meet.intersect(factor.annihilator);
  }
  if (!reasons.empty()) return reasons;
  // Condition 2 at the given powers.
  Subspace chainv(l.dim());
  Subspace full = Subspace::full(l.dim());
  for (std::size_t k = 0; k < r; ++k) {
    Subspace w = cert.complements[k];
    for (std::size_t q = 0; q < cert.powers[k]; ++q) w = l.bracket_subspaces(w, full);
    chainv = k == 0 ? w : l.bracket_subspaces(chainv, w);
  }
  (void)opts;
  if (chainv.is_zero()) {
    reasons.push_back("the nested bracket of the complements vanishes at the given powers");
    return reasons;
  }
  return l.dim() - ann_meet.dim();
}

namespace {

// Minimal ideal of a semisimple algebra: bottom of an ad-only composition
// chain of the adjoint module.
Subspace minimal_ideal(const LieAlgebra& l) {
  ModuleAction adjoint{l.dim(), {}};
  for (std::size_t i = 0; i < l.dim(); ++i) adjoint.generators.push_back(l.ad_basis(i));
  Subspace current = Subspace::full(l.dim());
  while (true) {
    // Find a proper nonzero submodule of `current` (as an ideal of L).
    std::vector<RowVec> reps = complement_reps(current, Subspace::zero(l.dim()));
    ModuleAction restricted{reps.size(), {}};
    for (const auto& g : adjoint.generators) {
      Matrix m(reps.size(), reps.size());
      for (std::size_t t = 0; t < reps.size(); ++t) {
        RowVec coords = factor_coords(Subspace::zero(l.dim()), reps, g.apply(reps[t]));
        coords.for_each([&](std::size_t row, const Rational& v) { m.set(row, t, v); });
      }
      restricted.generators.push_back(std::move(m));
    }
    auto analysis = analyze_module(restricted);
    if (analysis.verdict != ModuleVerdict::Reducible) return current;
    std::vector<RowVec> gens;
    for (const auto& row : analysis.proper_submodule->basis()) {
      RowVec lifted(l.dim());
      row.for_each([&](std::size_t t, const Rational& v) { lifted.add_scaled(reps[t], v); });
      gens.push_back(std::move(lifted));
    }
    current = Subspace::span(l.dim(), gens);
  }
}

}  // namespace

ExponentReport d_semisimple(const LieAlgebra& l, const ActionSpec& a) {
  if (!l.killing_nondegenerate())
    throw NotSemisimple("d_semisimple requires a nondegenerate Killing form");
  ExponentReport report;
  report.method = ExponentMethod::Semisimple;
  report.exactness = Exactness::Exact;
  if (l.dim() == 0) return report;
  // Split into simple ideals via Killing-orthogonal complements.
  Matrix killing = l.killing_form();
  std::vector<Subspace> simples;
  Subspace remaining = Subspace::full(l.dim());
  while (remaining.dim() > 0) {
    LieAlgebra sub = l.restrict_to(remaining);
    Subspace minimal_in_sub = minimal_ideal(sub);
    // Back to ambient coordinates.
    std::vector<RowVec> gens;
    for (const auto& row : minimal_in_sub.basis()) {
      RowVec lifted(l.dim());
      row.for_each([&](std::size_t t, const Rational& v) {
        lifted.add_scaled(remaining.basis()[t], v);
      });
      gens.push_back(std::move(lifted));
    }
    Subspace simple = Subspace::span(l.dim(), gens);
    simples.push_back(simple);
    // Killing-orthogonal complement of everything found so far.
    RankAccumulator found(l.dim());
    for (const auto& s : simples)
      for (const auto& row : s.basis()) found.insert(row);
    Subspace span_found = found.to_subspace();
    Matrix conditions = span_found.basis_matrix().multiply(killing);
    remaining = Subspace::from_matrix(conditions.kernel());
  }
  // Group the simple ideals into minimal H-invariant ideals by closing each
  // under the operators and the brackets.
  std::vector<Matrix> closure_gens;
  for (std::size_t i = 0; i < l.dim(); ++i) closure_gens.push_back(l.ad_basis(i));
  for (const auto& op : a.operators) closure_gens.push_back(op);
  ModuleAction closure_action{l.dim(), closure_gens};
  std::vector<Subspace> components;
  std::size_t check_total = 0;
  for (const auto& s : simples) {
    Subspace closed = invariant_closure(closure_action, s);
    bool seen = false;
    for (const auto& c : components)
      if (c == closed) seen = true;
    if (!seen) {
      components.push_back(closed);
      check_total += closed.dim();
    }
  }
  if (check_total != l.dim())
    throw std::logic_error("d_semisimple: invariant components do not partition the algebra");
  for (std::size_t i = 0; i < components.size(); ++i)
    for (std::size_t j = i + 1; j < components.size(); ++j)
      if (!components[i].intersect(components[j]).is_zero())
        throw std::logic_error("d_semisimple: invariant components overlap");
  std::size_t best = 0;
  for (const auto& c : components) best = std::max(best, c.dim());
  report.d = best;
  // A certificate for the best component: I = component, J = 0, T = I, q = 0.
  for (const auto& c : components)
    if (c.dim() == best) {
      ExponentCertificate cert;
      cert.pairs.emplace_back(c, Subspace::zero(l.dim()));
      cert.complements.push_back(c);
      cert.powers.push_back(0);
      report.certificate = std::move(cert);
      break;
    }
  return report;
}

namespace {

struct SearchHit {
  std::vector<std::size_t> factor_sequence;  // chain factor index per slot
  std::vector<std::size_t> powers;
};

// Does some tuple over the factor set `mask` (each used at least once,
// repetition allowed, length <= max_len) give a nonzero left-normed bracket?
std::optional<SearchHit> condition2_over_set(const LieAlgebra& l,
                                             const std::vector<Trajectory>& trajectories,
                                             const std::vector<std::size_t>& members,
                                             std::size_t max_len, std::size_t budget) {
  struct Node {
    Subspace value;
    std::size_t used_mask;
    std::vector<std::size_t> seq;
    std::vector<std::size_t> pow;
  };
  const std::size_t want = (std::size_t(1) << members.size()) - 1;
  std::size_t nodes = 0;
  // Depth-first over tuple slots; zero values prune (brackets with zero stay
  // zero).
  std::function<std::optional<SearchHit>(const Node&, std::size_t)> rec =
      [&](const Node& node, std::size_t depth) -> std::optional<SearchHit> {
    if (++nodes > budget) throw SearchBudgetExceeded("Condition 2 tuple search budget exceeded");
    if (node.used_mask == want && !node.seq.empty() && !node.value.is_zero())
      return SearchHit{node.seq, node.pow};
    if (depth == max_len) return std::nullopt;
    for (std::size_t mi = 0; mi < members.size(); ++mi) {
      const auto& traj = trajectories[members[mi]];
      for (std::size_t q = 0; q < traj.states.size(); ++q) {
        Subspace next = node.seq.empty() ? traj.states[q]
                                         : l.bracket_subspaces(node.value, traj.states[q]);
        if (next.is_zero()) continue;
        Node child{next, node.used_mask | (std::size_t(1) << mi), node.seq, node.pow};
        child.seq.push_back(members[mi]);
        child.pow.push_back(q);
        auto hit = rec(child, depth + 1);
        if (hit) return hit;
      }
    }
    return std::nullopt;
  };
  Node root{Subspace::zero(l.dim()), 0, {}, {}};
  return rec(root, 0);
}

}  // namespace

ExponentReport d_search(const LieAlgebra& l, const ActionSpec& a, const ExponentOptions& opts) {
  ExponentReport report;
  report.method = ExponentMethod::Search;
  if (l.dim() == 0) {
    report.exactness = Exactness::Exact;
    return report;
  }
  if (l.is_nilpotent()) {
    report.d = 0;
    report.exactness = Exactness::Exact;
    return report;
  }
  Subspace radical = l.solvable_radical();
  if (radical.is_zero()) {
    ExponentReport ss = d_semisimple(l, a);
    return ss;
  }
  std::size_t q_bound = opts.q_bound ? opts.q_bound : 4 * l.dim() * l.dim() + 4;
  std::size_t max_len = opts.max_tuple_length ? opts.max_tuple_length : 2 * l.dim();
  CompositionChain chain = composition_chain(l, a);
  Subspace levi = levi_for_action(l, a);
  const std::size_t theta = chain.factors.size();
  // Complements and trajectories, once per factor.
  std::vector<Subspace> complements;
  std::vector<Trajectory> trajectories;
  for (const auto& factor : chain.factors) {
    auto t = invariant_complement(l, a, levi, factor.outer, factor.inner);
    if (!t)
      throw NotHNiceDetected(
          "no H-invariant B-stable complement for a chain factor (H-niceness fails)");
    complements.push_back(*t);
    trajectories.push_back(subspace_trajectory(l, *t, q_bound));
    if (!trajectories.back().cycled)
      throw SearchBudgetExceeded("complement trajectory did not cycle within the bound");
  }
  std::size_t best = 0;
  std::optional<ExponentCertificate> best_cert;
  for (std::size_t mask = 1; mask < (std::size_t(1) << theta); ++mask) {
    std::vector<std::size_t> members;
    Subspace meet = Subspace::full(l.dim());
    for (std::size_t i = 0; i < theta; ++i)
      if (mask & (std::size_t(1) << i)) {
        members.push_back(i);
        meet = meet.intersect(chain.factors[i].annihilator);
      }
    std::size_t value = l.dim() - meet.dim();
    if (value <= best) continue;  // cannot improve
    auto hit = condition2_over_set(l, trajectories, members, max_len, opts.search_budget);
    if (!hit) continue;
    best = value;
    ExponentCertificate cert;
    for (std::size_t slot = 0; slot < hit->factor_sequence.size(); ++slot) {
      std::size_t fi = hit->factor_sequence[slot];
      cert.pairs.emplace_back(chain.factors[fi].outer, chain.factors[fi].inner);
      cert.complements.push_back(complements[fi]);
      cert.powers.push_back(hit->powers[slot]);
      cert.chain_indices.push_back(fi);
    }
    best_cert = std::move(cert);
  }
  report.d = best;
  if (best > 0) report.certificate = std::move(best_cert);
  // Exactness: exact when the chain is split-certified and either the factors
  // are pairwise non-isomorphic as (H,L)-modules, or the found value already
  // meets the unconditional upper bound dim L - dim of the intersection over
  // all factor annihilators (every valid tuple's annihilators come from the
  // chain's isomorphism classes by Jordan-Hoelder, so no tuple can beat it).
  bool exact = chain.split_certified;
  if (!exact) {
    report.diagnostics.push_back(
        "a chain factor could not be certified absolutely irreducible over Q");
  } else {
    bool repeats = false;
    for (std::size_t i = 0; i < theta && !repeats; ++i)
      for (std::size_t j = i + 1; j < theta && !repeats; ++j) {
        if (chain.factors[i].module.dim != chain.factors[j].module.dim) continue;
        repeats = irreducibles_isomorphic(chain.factors[i].module, chain.factors[j].module);
      }
    if (repeats) {
      Subspace meet_all = Subspace::full(l.dim());
      for (const auto& factor : chain.factors)
        meet_all = meet_all.intersect(factor.annihilator);
      if (best != l.dim() - meet_all.dim()) {
        exact = false;
        report.diagnostics.push_back(
            "isomorphic chain factors repeat and the annihilator upper bound is not attained; "
            "the chain search yields a lower bound");
      }
    }
  }
  report.exactness = exact ? Exactness::Exact : Exactness::LowerBound;
  return report;
}

ExponentReport pi_exponent(const LieAlgebra& l, const ActionSpec& a,
                           const ExponentOptions& opts) {
  if (l.dim() > 0 && !l.is_nilpotent() && l.killing_nondegenerate()) return d_semisimple(l, a);
  return d_search(l, a, opts);
}

SimplicityVerdict simplicity_criterion(const LieAlgebra& l, const ActionSpec& a,
                                       const ExponentOptions& opts) {
  if (l.dim() == 0)
    throw std::invalid_argument("simplicity criterion is stated for nonzero algebras");
  SimplicityVerdict verdict;
  ExponentReport report = pi_exponent(l, a, opts);
  verdict.d = report.d;
  verdict.d_equals_dim = report.d == l.dim();
  verdict.semisimple = l.killing_nondegenerate();
  // H-simplicity: the composition chain has exactly one step.
  CompositionChain chain = composition_chain(l, a);
  verdict.h_simple = chain.ideals.size() == 2;
  if (verdict.d_equals_dim != (verdict.semisimple && verdict.h_simple))
    throw std::logic_error("simplicity criterion biconditional violated");
  return verdict;
}

std::vector<std::string> sum_rule_check(const std::vector<LieAlgebra>& parts,
                                        const std::vector<ActionSpec>& actions,
                                        const ExponentOptions& opts) {
  std::vector<std::string> issues;
  if (parts.empty() || parts.size() != actions.size()) {
    issues.push_back("sum_rule_check needs matching nonempty part and action lists");
    return issues;
  }
  LieAlgebra sum = parts[0];
  ActionSpec sum_action = actions[0];
  for (std::size_t i = 1; i < parts.size(); ++i) {
    sum = LieAlgebra::direct_sum(sum, parts[i]);
    sum_action = direct_sum_action(sum_action, actions[i]);
  }
  ExponentReport whole = pi_exponent(sum, sum_action, opts);
  std::size_t expected = 0;
  bool flags_agree = true;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    ExponentReport part = pi_exponent(parts[i], actions[i], opts);
    expected = std::max(expected, part.d);
    flags_agree = flags_agree && part.exactness == whole.exactness;
  }
  if (whole.d != expected)
    issues.push_back("d of the direct sum is " + std::to_string(whole.d) +
                     " but the max over summands is " + std::to_string(expected));
  if (!flags_agree)
    issues.push_back("exactness flags of the sum and the summands disagree");
  return issues;
}

std::vector<EmpiricalRow> empirical_exponent(const std::vector<std::size_t>& codims,
                                             std::size_t dim_l) {
  if (codims.size() < 2)
    throw std::invalid_argument("empirical_exponent needs at least two values");
  std::vector<EmpiricalRow> rows;
  for (std::size_t i = 0; i < codims.size(); ++i) {
    EmpiricalRow row;
    row.n = i + 1;
    row.value = codims[i];
    row.root = row.value == 0 ? 0.0
                              : std::pow(static_cast<double>(row.value),
                                         1.0 / static_cast<double>(row.n));
    Integer bound = 1;
    for (std::size_t p = 0; p <= row.n; ++p) bound *= Integer(static_cast<long long>(dim_l));
    row.within_dim_bound = Integer(static_cast<long long>(row.value)) <= bound;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace codimlab
