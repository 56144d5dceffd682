#pragma once

#include "codimlab/action.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace codimlab {

// One left-normed labeled commutator term
// coeff * [x^{γ_{labels[0]}}_{perm[0]}, ..., x^{γ_{labels[n-1]}}_{perm[n-1]}].
// perm is 0-based: perm[t] is the variable occupying bracket slot t.
struct HTerm {
  Rational coeff;
  std::vector<std::size_t> perm;
  std::vector<std::size_t> labels;
};

struct MultilinearHPolynomial {
  std::size_t degree = 0;
  std::vector<HTerm> terms;

  static MultilinearHPolynomial zero(std::size_t degree) { return {degree, {}}; }
  static MultilinearHPolynomial monomial(std::vector<std::size_t> perm,
                                         std::vector<std::size_t> labels,
                                         Rational coeff = Rational(1));
};

// A multilinear map L^{⊗n} -> L, flattened: the value on the basis tuple
// (e_{i_1}, ..., e_{i_n}) has its output coordinate `out` stored at flat index
// ((i_1 d + i_2) d + ... + i_n) d + out, row-major with the output last.
struct EvaluationVector {
  std::size_t dim_l = 0;
  std::size_t degree = 0;
  RowVec data;

  static std::size_t flat_size(std::size_t dim_l, std::size_t degree);
  static std::size_t flat_index(std::size_t dim_l, const std::vector<std::size_t>& tuple,
                                std::size_t out);
  // Decodes a flat index into (tuple, out).
  static std::pair<std::vector<std::size_t>, std::size_t> decode(std::size_t dim_l,
                                                                 std::size_t degree,
                                                                 std::size_t index);
};

// Value tensor of one labeled monomial: substitute e_{i_t} for x_t, apply the
// labeled operator to each argument, bracket left-normed in perm order.
EvaluationVector eval_monomial(const LieAlgebra& l, const ActionSpec& a,
                               const std::vector<std::size_t>& perm,
                               const std::vector<std::size_t>& labels);

EvaluationVector eval_polynomial(const LieAlgebra& l, const ActionSpec& a,
                                 const MultilinearHPolynomial& f);

struct IdentityCheck {
  bool holds = false;
  // Witness substitution (basis indices per variable) when the answer is no.
  std::vector<std::size_t> witness;
  RowVec witness_value;
};

IdentityCheck is_identity(const LieAlgebra& l, const ActionSpec& a,
                          const MultilinearHPolynomial& f);

// Associative signed-word polynomials (used for the Regev generator only).
struct AssocPolynomial {
  std::size_t num_vars = 0;
  std::vector<std::pair<int, std::vector<std::size_t>>> terms;  // (sign, word)
};

// The doubly alternating Regev polynomial in 2q^2 variables
// x_1..x_{q^2}, y_1..y_{q^2} with interleaved blocks of sizes 1, 3, ..., 2q-1;
// variable indices 0..q^2-1 are the x's, q^2..2q^2-1 the y's.
AssocPolynomial regev_polynomial(std::size_t q);

}  // namespace codimlab
