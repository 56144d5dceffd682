#pragma once

#include "codimlab/group.hpp"
#include "codimlab/lie.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace codimlab {

struct Grading {
  GroupSpec group;
  std::vector<GroupElem> degrees;  // one per basis index of L

  // Support: the distinct degrees actually used, in first-use order.
  std::vector<GroupElem> support() const;
  // Indices of basis vectors in the component of the given degree.
  std::vector<std::size_t> component(const GroupElem& g) const;
  // Restriction of the grading to a subset of basis indices.
  Grading restricted(const std::vector<std::size_t>& indices) const;
};

enum class ActionOrigin { Trivial, GroupAlgebra, DualGroupAlgebra, Custom };

// The finite-dimensional image of the Hopf action: a list of operators
// spanning ζ(H) on a fixed basis (γ_1, ..., γ_m), with optional
// comultiplication Δ(γ_i) = Σ_{j,k} μ[i](j,k) γ_j ⊗ γ_k and counit.
struct ActionSpec {
  std::size_t h_dim = 0;
  std::vector<Matrix> operators;
  std::vector<std::string> operator_names;
  std::optional<std::vector<Matrix>> comultiplication;  // μ[i] is an m × m matrix
  std::optional<std::vector<Rational>> counit;
  ActionOrigin origin = ActionOrigin::Custom;
  // Indices of a maximal linearly independent subset of the operators
  // (an effective basis of ζ(H)); computed at construction.
  std::vector<std::size_t> effective;

  std::size_t module_dim() const;
  std::size_t effective_dim() const { return effective.size(); }
  void compute_effective_basis();
  std::optional<std::size_t> operator_index(const std::string& name) const;
};

struct NonHomogeneous : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotAutomorphism : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct RelationViolated : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct MissingComultiplication : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Trivial action: the identity operator only.
ActionSpec trivial_action(std::size_t dim);

// Checks homogeneity of the grading against the structure constants; throws
// NonHomogeneous naming the offending bracket pair.
void check_homogeneous(const LieAlgebra& l, const Grading& g);

// Dual-group-algebra action: one projection per support element, with
// Δ(h_g) = Σ_{g1 g2 = g} h_{g1} ⊗ h_{g2} over the support and ε(h_g) = [g = e].
ActionSpec from_grading(const LieAlgebra& l, const Grading& g);

// Group-algebra action from matrices for a generating set (by element name).
// Matrices for G0 elements must be automorphisms, the others anti-automorphisms;
// the Lemma-style sign twist is applied at ingestion so downstream code sees
// automorphisms only.  Operators are the twisted matrices of all group
// elements, with Δ(g) = g ⊗ g and ε(g) = 1.
ActionSpec from_group_action(const LieAlgebra& l, const GroupSpec& g,
                             const std::map<std::string, Matrix>& generator_matrices);

// Checks h[a,b] = Σ μ [γ_j a, γ_k b] on every H-basis element and basis pair.
// Throws MissingComultiplication without Δ; returns violation descriptions.
std::vector<std::string> verify_module_algebra(const LieAlgebra& l, const ActionSpec& a);

// true iff ζ(γ_j) U ⊆ U for all j.
bool invariant(const ActionSpec& a, const Subspace& u);

// Block-diagonal action on a direct sum; requires equal H-data on both sides.
ActionSpec direct_sum_action(const ActionSpec& a, const ActionSpec& b);

}  // namespace codimlab
