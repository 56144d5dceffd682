#pragma once

#include "codimlab/action.hpp"
#include "codimlab/lie.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace codimlab::testing {

// Builds structure constants from bracket triples (i, j, k, coeff) given for
// i < j; the antisymmetric counterpart is filled in automatically.
inline LieAlgebra make_lie(std::vector<std::string> names,
                           const std::vector<std::tuple<int, int, int, Rational>>& triples) {
  std::size_t d = names.size();
  std::vector<std::vector<RowVec>> c(d, std::vector<RowVec>(d, RowVec(d)));
  for (const auto& [i, j, k, coeff] : triples) {
    c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].set(
        static_cast<std::size_t>(k),
        c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].at(static_cast<std::size_t>(k)) + coeff);
    c[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)].set(
        static_cast<std::size_t>(k),
        c[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)].at(static_cast<std::size_t>(k)) - coeff);
  }
  return LieAlgebra(std::move(names), std::move(c));
}

// sl2 with [e,f] = h, [h,e] = 2e, [h,f] = -2f; basis order (e, h, f).
inline LieAlgebra sl2() {
  return make_lie({"e", "h", "f"}, {{0, 2, 1, Rational(1)},
                                    {1, 0, 0, Rational(2)},
                                    {1, 2, 2, Rational(-2)}});
}

// gl2 on the basis (E11, E12, E21, E22).
inline LieAlgebra gl2() {
  return make_lie({"E11", "E12", "E21", "E22"},
                  {{0, 1, 1, Rational(1)},    // [E11,E12] = E12
                   {0, 2, 2, Rational(-1)},   // [E11,E21] = -E21
                   {1, 2, 0, Rational(1)},    // [E12,E21] = E11 - E22
                   {1, 2, 3, Rational(-1)},
                   {1, 3, 1, Rational(1)},    // [E12,E22] = E12
                   {2, 3, 2, Rational(-1)}}); // [E21,E22] = -E21
}

// Heisenberg algebra: [x, y] = z.
inline LieAlgebra heisenberg() {
  return make_lie({"x", "y", "z"}, {{0, 1, 2, Rational(1)}});
}

// Two-dimensional non-abelian solvable algebra: [x, y] = y.
inline LieAlgebra solvable2() {
  return make_lie({"x", "y"}, {{0, 1, 1, Rational(1)}});
}

// sl2 acting on its natural module Q^2 = span{v1, v2} as an abelian ideal:
// e v2 = v1, h v1 = v1, h v2 = -v2, f v1 = v2.  Basis (e, h, f, v1, v2).
inline LieAlgebra sl2_semidirect_q2() {
  return make_lie({"e", "h", "f", "v1", "v2"},
                  {{0, 2, 1, Rational(1)},
                   {1, 0, 0, Rational(2)},
                   {1, 2, 2, Rational(-2)},
                   {0, 4, 3, Rational(1)},    // [e, v2] = v1
                   {1, 3, 3, Rational(1)},    // [h, v1] = v1
                   {1, 4, 4, Rational(-1)},   // [h, v2] = -v2
                   {2, 3, 4, Rational(1)}});  // [f, v1] = v2
}

// gl2 ⊕ gl2 on the basis (A11, A12, A21, A22, B11, B12, B21, B22).
inline LieAlgebra gl2_plus_gl2() { return LieAlgebra::direct_sum(gl2(), gl2()); }

inline LieAlgebra sl2_plus_sl2() { return LieAlgebra::direct_sum(sl2(), sl2()); }

// Z2-grading of gl2: diagonal part even, antidiagonal part odd.
inline Grading gl2_z2_grading() {
  Grading g;
  g.group = GroupSpec::abelian({2});
  g.degrees = {std::vector<long long>{0}, std::vector<long long>{1},
               std::vector<long long>{1}, std::vector<long long>{0}};
  return g;
}

// The S3-graded subalgebra of gl4 (two diagonal gl2 blocks): basis
// (E11, E12, E21, E22, E33, E34, E43, E44); diagonals graded by e, the first
// block's off-diagonal by (12), the second's by (23).
inline LieAlgebra gl4sub() {
  auto l = gl2_plus_gl2();
  std::vector<std::vector<RowVec>> c;
  for (std::size_t i = 0; i < 8; ++i) {
    c.emplace_back();
    for (std::size_t j = 0; j < 8; ++j) c.back().push_back(l.bracket_basis(i, j));
  }
  return LieAlgebra({"E11", "E12", "E21", "E22", "E33", "E34", "E43", "E44"}, std::move(c));
}

inline Grading gl4sub_s3_grading() {
  Grading g;
  g.group = GroupSpec::symmetric3();
  auto e = *g.group.parse("e");
  auto t12 = *g.group.parse("(12)");
  auto t23 = *g.group.parse("(23)");
  g.degrees = {e, t12, t12, e, e, t23, t23, e};
  return g;
}

// gl2 ⊕ gl2 with the S3-grading of the 2gl2 example: diagonals in degree e,
// first copy's off-diagonal in degree (12), second copy's in degree (23).
inline Grading gl2gl2_s3_grading() {
  Grading g;
  g.group = GroupSpec::symmetric3();
  auto e = *g.group.parse("e");
  auto t12 = *g.group.parse("(12)");
  auto t23 = *g.group.parse("(23)");
  g.degrees = {e, t12, t12, e, e, t23, t23, e};
  return g;
}

// The Example-IdH Hopf action on gl2: e0 keeps the diagonal, e1 the
// antidiagonal; Δ(e0) = e0⊗e0 + e1⊗e1, Δ(e1) = e0⊗e1 + e1⊗e0.
inline ActionSpec gl2_e0e1_action() {
  ActionSpec a;
  a.h_dim = 2;
  a.origin = ActionOrigin::Custom;
  Matrix e0(4, 4), e1(4, 4);
  e0.set(0, 0, Rational(1));
  e0.set(3, 3, Rational(1));
  e1.set(1, 1, Rational(1));
  e1.set(2, 2, Rational(1));
  a.operators = {e0, e1};
  a.operator_names = {"e0", "e1"};
  Matrix mu0(2, 2), mu1(2, 2);
  mu0.set(0, 0, Rational(1));
  mu0.set(1, 1, Rational(1));
  mu1.set(0, 1, Rational(1));
  mu1.set(1, 0, Rational(1));
  a.comultiplication = std::vector<Matrix>{mu0, mu1};
  a.counit = std::vector<Rational>{Rational(1), Rational(0)};
  a.compute_effective_basis();
  return a;
}

// ψ from the gl2 Z2-action example: negate the off-diagonal entries.
inline Matrix gl2_psi_matrix() {
  Matrix psi = Matrix::identity(4);
  psi.set(1, 1, Rational(-1));
  psi.set(2, 2, Rational(-1));
  return psi;
}

inline ActionSpec gl2_psi_action() {
  GroupSpec z2 = GroupSpec::from_table({"e", "psi"}, {{0, 1}, {1, 0}});
  return from_group_action(gl2(), z2, {{"psi", gl2_psi_matrix()}});
}

// Swap automorphism on sl2 ⊕ sl2.
inline ActionSpec sl2sl2_swap_action() {
  GroupSpec z2 = GroupSpec::from_table({"e", "s"}, {{0, 1}, {1, 0}});
  Matrix swap(6, 6);
  for (std::size_t i = 0; i < 3; ++i) {
    swap.set(i, 3 + i, Rational(1));
    swap.set(3 + i, i, Rational(1));
  }
  return from_group_action(sl2_plus_sl2(), z2, {{"s", swap}});
}

}  // namespace codimlab::testing
