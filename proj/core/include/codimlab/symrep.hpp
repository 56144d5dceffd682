#pragma once

#include "codimlab/codim.hpp"
#include "codimlab/exponent.hpp"
#include "codimlab/polynomial.hpp"

#include <string>
#include <vector>

namespace codimlab {

struct Partition {
  std::vector<std::size_t> parts;  // weakly decreasing, positive

  std::size_t n() const;
  std::size_t rows() const { return parts.size(); }
  std::size_t part(std::size_t i) const { return i < parts.size() ? parts[i] : 0; }
  std::string dashed() const;  // "3-1-1"
  bool operator==(const Partition& other) const { return parts == other.parts; }
  bool operator<(const Partition& other) const;  // reverse-lex listing order
};

// All partitions of n, from (n) down to (1^n).
std::vector<Partition> partitions_of(std::size_t n);

// Number of standard Young tableaux, by the hook length formula.
unsigned long long hook_dim(const Partition& lambda);

// Irreducible character value chi_lambda at the class of the given cycle
// type, by the Murnaghan-Nakayama rule.
long long irreducible_character(const Partition& lambda, const Partition& cycle_type);

// Conjugacy class size n!/z_mu.
unsigned long long class_size(const Partition& cycle_type);

struct NonIntegralMultiplicity : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CocharacterReport {
  std::size_t n = 0;
  std::vector<std::pair<Partition, std::size_t>> multiplicities;  // nonzero only
  std::size_t codim = 0;        // c_n^H, the trace at the identity
  std::size_t d_used = 0;
  bool d_exact = false;
  std::size_t p_used = 0;
  std::size_t bound_constant = 0;  // p ((dim L) p + 3)
  std::size_t dim_l = 0;
};

// Cocharacter of V_n^H modulo the identities of L: the S_n acts on the image
// of the evaluation map by permuting tensor slots; traces against the
// irreducible characters give the multiplicities, which must be non-negative
// integers.
CocharacterReport cocharacter(const LieAlgebra& l, const ActionSpec& a, std::size_t n,
                              const CodimOptions& opts = {});

// Empty iff every nonzero multiplicity satisfies lambda_{d+1} < p((dim L)p+3)
// and lambda_{dim L + 1} = 0.
std::vector<std::string> multiplicity_bound_audit(const CocharacterReport& report);

// Sum of the multiplicities.
unsigned long long colength(const CocharacterReport& report);

// Applies the Young symmetrizer e*_T = b_T a_T (row symmetrization, then
// column antisymmetrization) to the variable indices of f.
MultilinearHPolynomial young_symmetrizer_apply(
    const std::vector<std::vector<std::size_t>>& tableau, const MultilinearHPolynomial& f);

// The standard (row-major) tableau of shape lambda.
std::vector<std::vector<std::size_t>> standard_tableau(const Partition& lambda);

// Matrix of a permutation acting on the image subspace, in its canonical
// basis; exposed for the group-law spot checks.
Matrix permutation_action_on_image(const LieAlgebra& l, const Subspace& image, std::size_t n,
                                   const std::vector<std::size_t>& tau);

}  // namespace codimlab
