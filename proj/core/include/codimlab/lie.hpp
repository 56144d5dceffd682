#pragma once

#include "codimlab/subspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace codimlab {

struct LieViolation {
  enum class Kind { Alternation, Jacobi } kind;
  std::size_t i, j, k;  // offending basis triple (k unused for alternation)
  std::string describe() const;
};

struct StructureReport {
  Subspace center;
  std::vector<Subspace> derived_series;        // L ⊇ [L,L] ⊇ ... down to stable
  std::vector<Subspace> lower_central_series;  // L ⊇ [L,L] ⊇ [[L,L],L] ⊇ ...
  Subspace solvable_radical;
  Subspace nilradical;
  std::size_t nilpotency_index = 1;  // least p with every p-fold product in N zero
  std::optional<Subspace> levi;
  std::optional<Subspace> levi_complement;  // S with R = S ⊕ N and [B,S] = 0
  StructureReport() : center(0), solvable_radical(0), nilradical(0) {}
};

// Finite-dimensional Lie algebra over Q by structure constants:
// [e_i, e_j] = sum_k c[i][j][k] e_k.
class LieAlgebra {
 public:
  LieAlgebra(std::vector<std::string> basis_names,
             std::vector<std::vector<RowVec>> structure_constants);
  static LieAlgebra zero();
  static LieAlgebra abelian(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const RowVec& bracket_basis(std::size_t i, std::size_t j) const { return c_[i][j]; }
  RowVec bracket(const RowVec& x, const RowVec& y) const;

  std::vector<LieViolation> validate() const;
  void require_valid() const;  // throws on the first violation

  Matrix ad(const RowVec& x) const;
  Matrix ad_basis(std::size_t i) const;
  Matrix killing_form() const;  // K(i,j) = tr(ad e_i ad e_j)
  bool killing_nondegenerate() const;

  Subspace bracket_subspaces(const Subspace& u, const Subspace& v) const;
  Subspace derived_subalgebra() const;
  Subspace center() const;
  std::vector<Subspace> derived_series() const;
  std::vector<Subspace> lower_central_series() const;
  bool is_ideal(const Subspace& u) const;
  bool is_subalgebra(const Subspace& u) const;
  bool is_abelian() const;
  bool is_nilpotent() const;
  bool is_solvable() const;
  bool is_semisimple() const { return killing_nondegenerate(); }
  // Least p >= 1 with every left-normed product of p elements zero; requires a
  // nilpotent algebra.
  std::size_t nilpotency_index() const;
  // Same, for an ideal U of this algebra (products formed inside U).
  std::size_t nilpotency_index_of_ideal(const Subspace& u) const;

  // Killing-orthogonal complement of [L,L]; the maximal solvable ideal in
  // characteristic zero.  Postconditions (ideal, solvable) are checked.
  Subspace solvable_radical() const;
  // Largest nilpotent ideal N with its index p; checked to be a nilpotent
  // ideal containing [L,R].
  std::pair<Subspace, std::size_t> nilradical() const;
  // Levi subalgebra B and a complement S with R = S ⊕ N, [B,S] = 0.
  // All postconditions are machine-checked; throws LeviLiftFailed on a solver
  // failure (illegal in characteristic zero).
  std::pair<Subspace, Subspace> levi_decomposition() const;
  // {x in L : [x, I] ⊆ J} for nested ideals J ⊆ I; checked to be an ideal.
  Subspace annihilator(const Subspace& outer, const Subspace& inner) const;

  static LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);
  // Quotient by an ideal, on the canonical non-pivot coordinate complement.
  // section: quotient basis index -> representative in L (rows);
  // projection: L -> quotient coordinates.
  LieAlgebra quotient(const Subspace& ideal, Matrix* section = nullptr,
                      Matrix* projection = nullptr) const;
  // Subalgebra spanned by a subset of basis vectors (must be closed).
  LieAlgebra subalgebra_on_basis(const std::vector<std::size_t>& indices) const;
  // Restriction to an arbitrary subalgebra; section rows give the basis used.
  LieAlgebra restrict_to(const Subspace& sub, Matrix* section = nullptr) const;

  StructureReport structure_report() const;

 private:
  std::size_t dim_;
  std::vector<std::string> names_;
  std::vector<std::vector<RowVec>> c_;  // c_[i][j] = [e_i, e_j] as a RowVec
};

struct LeviLiftFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotNested : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace codimlab
