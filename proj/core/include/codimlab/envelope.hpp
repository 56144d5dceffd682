#pragma once

#include "codimlab/subspace.hpp"

#include <optional>
#include <vector>

namespace codimlab {

// A module Q^dim with a finite list of acting operators.  Used for factors of
// the adjoint representation with the Lie action and the Hopf operators acting
// together.
struct ModuleAction {
  std::size_t dim = 0;
  std::vector<Matrix> generators;
};

// Unital associative subalgebra of End(Q^f) generated by the operators,
// closed under products.  Elements are flattened row-major to Q^{f*f}.
class Envelope {
 public:
  explicit Envelope(const ModuleAction& action);

  std::size_t module_dim() const { return f_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Matrix>& basis() const { return basis_; }

  // Jacobson radical via the regular-representation trace form (exact in
  // characteristic zero): J(A) = {x : tr_reg(x y) = 0 for all y}.
  std::vector<Matrix> radical_basis() const;

 private:
  RowVec flatten(const Matrix& m) const;
  std::size_t f_;
  std::vector<Matrix> basis_;
  Subspace span_;  // canonical span of flattened basis
};

// Basis of {X : X G = G X for every generator G}.
std::vector<Matrix> commutant(const ModuleAction& action);

// Smallest invariant subspace containing the seed vector.
Subspace spin(const ModuleAction& action, const RowVec& seed);
// Smallest invariant subspace containing a given subspace.
Subspace invariant_closure(const ModuleAction& action, const Subspace& seed);

enum class ModuleVerdict {
  Irreducible,  // irreducible with endomorphism algebra Q (split)
  Reducible,    // a proper nonzero submodule was found
  NonSplit,     // semisimple, commutant bigger than Q, no splitting found
};

struct ModuleAnalysis {
  ModuleVerdict verdict;
  std::optional<Subspace> proper_submodule;  // present when Reducible
  std::size_t commutant_dim = 0;
};

ModuleAnalysis analyze_module(const ModuleAction& action);

// Intertwiner space Hom(M1, M2): matrices X with X a1 = a2 X per generator
// pair.  For irreducible modules a nonzero hom is an isomorphism.
std::vector<Matrix> hom_space(const ModuleAction& m1, const ModuleAction& m2);
bool irreducibles_isomorphic(const ModuleAction& m1, const ModuleAction& m2);

}  // namespace codimlab
