#pragma once

#include "codimlab/action.hpp"
#include "codimlab/envelope.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace codimlab {

struct NotHNiceDetected : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotSemisimple : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SearchBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Witness for a value of d(L): ideal pairs (I_k, J_k) with irreducible
// factors, invariant complements T_k with I_k = J_k ⊕ T_k, and powers q_k
// with [[T_1, L^{q_1}], ..., [T_r, L^{q_r}]] != 0.
struct ExponentCertificate {
  std::vector<std::pair<Subspace, Subspace>> pairs;
  std::vector<Subspace> complements;
  std::vector<std::size_t> powers;
  // Positions of the pairs in the engine's composition chain, when known.
  std::vector<std::size_t> chain_indices;
};

enum class ExponentMethod { Semisimple, Search, Certificate };
enum class Exactness { Exact, LowerBound };

struct ExponentReport {
  std::size_t d = 0;
  std::optional<ExponentCertificate> certificate;
  ExponentMethod method = ExponentMethod::Search;
  Exactness exactness = Exactness::Exact;
  std::vector<std::string> diagnostics;
};

// One factor of the composition chain, with its module structure over the
// envelope of ad(L) and the Hopf operators.
struct ChainFactor {
  Subspace outer;
  Subspace inner;
  std::vector<RowVec> reps;  // factor basis representatives in L
  ModuleAction module;       // generators: ad(e_0..e_{d-1}), then the operators
  Subspace annihilator;
  bool split_certified = true;  // false when the irreducibility is NonSplit
};

struct CompositionChain {
  std::vector<Subspace> ideals;  // L = ideals[0] ⊋ ... ⊋ ideals.back() = 0
  std::vector<ChainFactor> factors;
  bool split_certified = true;
};

// Factor module of outer/inner as an (H,L)-module; reps are the canonical
// complement representatives.
ChainFactor make_chain_factor(const LieAlgebra& l, const ActionSpec& a, const Subspace& outer,
                              const Subspace& inner);

// Composition chain of H-invariant ideals refining 0 ⊆ N ⊆ R ⊆ L.
CompositionChain composition_chain(const LieAlgebra& l, const ActionSpec& a);

// The Levi subalgebra used for complement stability: the computed Levi when it
// is invariant, otherwise a Reynolds-averaged retry for group and dual-group
// origins; throws NotHNiceDetected when no invariant Levi is found.
Subspace levi_for_action(const LieAlgebra& l, const ActionSpec& a);

// H-invariant B-stable complement T of inner in outer, by solving for an
// equivariant splitting of the factor; nullopt when none exists.
std::optional<Subspace> invariant_complement(const LieAlgebra& l, const ActionSpec& a,
                                             const Subspace& levi, const Subspace& outer,
                                             const Subspace& inner);

struct Condition2Result {
  bool satisfiable = false;
  std::vector<std::size_t> powers;
  bool exhausted = false;  // a trajectory failed to cycle within the bound
  std::size_t bound = 0;
};

// Iterates W_k(0) = T_k, W_k(q+1) = [W_k(q), L]; trajectories are memoized by
// canonical form (cycle detection), then tuples of trajectory states are
// searched for a nonzero left-normed bracket.
Condition2Result condition2_check(const LieAlgebra& l,
                                  const std::vector<Subspace>& complements,
                                  std::size_t q_bound = 0);

struct ExponentOptions {
  std::size_t q_bound = 0;          // 0: default 4 (dim L)^2
  std::size_t max_tuple_length = 0; // 0: default 2 dim L
  std::size_t search_budget = 200000;  // DFS node budget for Condition 2
};

// Mechanically verifies every certificate invariant; on success returns
// dim L - dim of the intersected annihilators, otherwise the rejection
// reasons.
std::variant<std::size_t, std::vector<std::string>> check_certificate(
    const LieAlgebra& l, const ActionSpec& a, const ExponentCertificate& cert,
    const ExponentOptions& opts = {});

// Semisimple fast path: decompose into minimal H-invariant ideals and take
// the maximal dimension.  Requires a nondegenerate Killing form.
ExponentReport d_semisimple(const LieAlgebra& l, const ActionSpec& a);

// Search over tuples of factor pairs of one fixed composition chain.
ExponentReport d_search(const LieAlgebra& l, const ActionSpec& a,
                        const ExponentOptions& opts = {});

// Dispatches to the semisimple path or the chain search.
ExponentReport pi_exponent(const LieAlgebra& l, const ActionSpec& a,
                           const ExponentOptions& opts = {});

struct SimplicityVerdict {
  bool d_equals_dim = false;
  bool semisimple = false;
  bool h_simple = false;
  std::size_t d = 0;
};

// Computes the three booleans independently and asserts the biconditional
// d = dim L  <=>  semisimple and H-simple.
SimplicityVerdict simplicity_criterion(const LieAlgebra& l, const ActionSpec& a,
                                       const ExponentOptions& opts = {});

// d of the direct sum must equal the max over the summands.
std::vector<std::string> sum_rule_check(const std::vector<LieAlgebra>& parts,
                                        const std::vector<ActionSpec>& actions,
                                        const ExponentOptions& opts = {});

struct EmpiricalRow {
  std::size_t n = 0;
  std::size_t value = 0;
  double root = 0.0;   // value^{1/n}, display only
  bool within_dim_bound = false;  // value <= (dim L)^{n+1}, exact
};

std::vector<EmpiricalRow> empirical_exponent(const std::vector<std::size_t>& codims,
                                             std::size_t dim_l);

}  // namespace codimlab
