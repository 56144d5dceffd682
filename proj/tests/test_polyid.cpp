#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "codimlab/polynomial.hpp"
#include "fixtures.hpp"

using namespace codimlab;
using namespace codimlab::testing;

TEST_CASE("eval_monomial: n=1 trivial H is the identity map") {
  auto l = sl2();
  auto a = trivial_action(3);
  auto vec = eval_monomial(l, a, {0}, {0});
  // value on e_i is e_i: flat index i*3 + i carries 1.
  for (std::size_t i = 0; i < 3; ++i) CHECK(vec.data.at(i * 3 + i) == Rational(1));
  CHECK(vec.data.nnz() == 3);
}

TEST_CASE("eval_monomial: n=2 identity perm flattens the bracket tensor") {
  auto l = sl2();
  auto a = trivial_action(3);
  auto vec = eval_monomial(l, a, {0, 1}, {0, 0});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      RowVec expected = l.bracket_basis(i, j);
      for (std::size_t k = 0; k < 3; ++k)
        CHECK(vec.data.at((i * 3 + j) * 3 + k) == expected.at(k));
    }
}

TEST_CASE("eval_monomial: swapped perm negates the vector") {
  auto l = sl2();
  auto a = trivial_action(3);
  auto v12 = eval_monomial(l, a, {0, 1}, {0, 0});
  auto v21 = eval_monomial(l, a, {1, 0}, {0, 0});
  v21.data.add_scaled(v12.data, Rational(1));
  CHECK(v21.data.is_zero());
}

TEST_CASE("eval_polynomial: zero polynomial, anticommutativity, Jacobi") {
  auto l = gl2();
  auto a = trivial_action(4);
  CHECK(eval_polynomial(l, a, MultilinearHPolynomial::zero(2)).data.is_zero());

  MultilinearHPolynomial anti;
  anti.degree = 2;
  anti.terms.push_back({Rational(1), {0, 1}, {0, 0}});
  anti.terms.push_back({Rational(1), {1, 0}, {0, 0}});
  CHECK(eval_polynomial(l, a, anti).data.is_zero());

  // [x1,x2,x3] + [x2,x3,x1] + [x3,x1,x2]: the left-normed Jacobi combination.
  MultilinearHPolynomial jac;
  jac.degree = 3;
  jac.terms.push_back({Rational(1), {0, 1, 2}, {0, 0, 0}});
  jac.terms.push_back({Rational(1), {1, 2, 0}, {0, 0, 0}});
  jac.terms.push_back({Rational(1), {2, 0, 1}, {0, 0, 0}});
  CHECK(eval_polynomial(l, a, jac).data.is_zero());
}

TEST_CASE("is_identity: graded identity on Z2-graded gl2") {
  auto l = gl2();
  auto a = from_grading(l, gl2_z2_grading());
  // [x^{(0)}, y^{(0)}]: label 0 is the projection onto the even component.
  auto f = MultilinearHPolynomial::monomial({0, 1}, {0, 0});
  CHECK(is_identity(l, a, f).holds);
  // [x^{(1)}, y^{(1)}] is not an identity ([E12, E21] != 0).
  auto g = MultilinearHPolynomial::monomial({0, 1}, {1, 1});
  auto check = is_identity(l, a, g);
  CHECK_FALSE(check.holds);
}

TEST_CASE("is_identity: S3-graded identities of the gl4 subalgebra") {
  auto l = gl4sub();
  auto a = from_grading(l, gl4sub_s3_grading());
  REQUIRE(a.h_dim == 3);
  auto e_idx = *a.operator_index("e");
  auto t12_idx = *a.operator_index("(12)");
  auto t23_idx = *a.operator_index("(23)");
  CHECK(is_identity(l, a, MultilinearHPolynomial::monomial({0, 1}, {t12_idx, t23_idx})).holds);
  CHECK(is_identity(l, a, MultilinearHPolynomial::monomial({0, 1}, {e_idx, e_idx})).holds);
  CHECK_FALSE(
      is_identity(l, a, MultilinearHPolynomial::monomial({0, 1}, {e_idx, t12_idx})).holds);
}

TEST_CASE("is_identity: [x + x^psi, y + y^psi] on gl2") {
  auto l = gl2();
  auto a = gl2_psi_action();
  auto one = *a.operator_index("e");
  auto psi = *a.operator_index("psi");
  MultilinearHPolynomial f;
  f.degree = 2;
  for (auto la : {one, psi})
    for (auto lb : {one, psi}) f.terms.push_back({Rational(1), {0, 1}, {la, lb}});
  CHECK(is_identity(l, a, f).holds);
  // Drop one of the four terms and it stops being an identity.
  MultilinearHPolynomial g = f;
  g.terms.pop_back();
  CHECK_FALSE(is_identity(l, a, g).holds);
}

TEST_CASE("is_identity: [x^{e0}, y^{e0}] under the Example-IdH action") {
  auto l = gl2();
  auto a = gl2_e0e1_action();
  CHECK(is_identity(l, a, MultilinearHPolynomial::monomial({0, 1}, {0, 0})).holds);
  auto check = is_identity(l, a, MultilinearHPolynomial::monomial({0, 1}, {1, 1}));
  CHECK_FALSE(check.holds);
  REQUIRE(check.witness.size() == 2);
  // The witness really evaluates to a nonzero bracket of antidiagonal parts.
  RowVec u = a.operators[1].apply(RowVec::unit(4, check.witness[0]));
  RowVec v = a.operators[1].apply(RowVec::unit(4, check.witness[1]));
  CHECK(l.bracket(u, v) == check.witness_value);
  CHECK_FALSE(check.witness_value.is_zero());
}

TEST_CASE("label change within the operator span preserves identity verdicts") {
  // Replacing the projections (p0, p1) by (id, p0 - p1), another basis of the
  // same span, must not change is_identity outcomes once polynomials are
  // rewritten accordingly: here [x^{(0)}, y^{(0)}] in the new basis is
  // 1/4 ([x+x', y+y']) with x' relabeled; check the simplest instance
  // [p0 x, p0 y] = 1/4 [(id + q) x, (id + q) y] with q = p0 - p1.
  auto l = gl2();
  auto a = from_grading(l, gl2_z2_grading());
  ActionSpec alt = a;
  alt.operators[0] = Matrix::identity(4);
  alt.operators[1] = a.operators[0].plus(a.operators[1].scaled(Rational(-1)));
  alt.comultiplication.reset();
  alt.counit.reset();
  alt.compute_effective_basis();
  MultilinearHPolynomial f;
  f.degree = 2;
  for (auto la : {0, 1})
    for (auto lb : {0, 1})
      f.terms.push_back({make_rational(1, 4), {0, 1},
                         {static_cast<std::size_t>(la), static_cast<std::size_t>(lb)}});
  CHECK(is_identity(l, alt, f).holds);
}

TEST_CASE("regev_polynomial: q=1 and q=2 shapes") {
  auto r1 = regev_polynomial(1);
  CHECK(r1.num_vars == 2);
  REQUIRE(r1.terms.size() == 1);
  CHECK(r1.terms[0].first == 1);
  CHECK(r1.terms[0].second == std::vector<std::size_t>{0, 1});

  auto r2 = regev_polynomial(2);
  CHECK(r2.num_vars == 8);
  CHECK(r2.terms.size() == 576);  // (4!)^2
  // Interleaved block shape: positions 0, then 1..3 for x; same for y.
  const auto& word = r2.terms[0].second;  // identity permutations
  CHECK(word == std::vector<std::size_t>{0, 4, 1, 2, 3, 5, 6, 7});
}

TEST_CASE("regev_polynomial(2) is central and nonzero on M_2") {
  auto r2 = regev_polynomial(2);
  // Exhaustive over basis substitutions: every argument is a matrix unit
  // E_{rc}, so each word multiplies out by index chaining
  // (E_{ab} E_{cd} = [b == c] E_{ad}) with integer coefficients.
  bool saw_nonzero_scalar = false;
  bool all_central = true;
  long long args_row[8], args_col[8];
  for (std::size_t xa = 0; xa < 256 && all_central; ++xa)
    for (std::size_t ya = 0; ya < 256; ++ya) {
      std::size_t xs = xa, ys = ya;
      for (int t = 0; t < 4; ++t) {
        args_row[t] = (xs % 4) / 2;
        args_col[t] = (xs % 4) % 2;
        xs /= 4;
        args_row[4 + t] = (ys % 4) / 2;
        args_col[4 + t] = (ys % 4) % 2;
        ys /= 4;
      }
      long long value[2][2] = {{0, 0}, {0, 0}};
      for (const auto& [sign, word] : r2.terms) {
        long long row = args_row[word[0]], col = args_col[word[0]];
        bool alive = true;
        for (std::size_t t = 1; t < word.size(); ++t) {
          if (col != args_row[word[t]]) {
            alive = false;
            break;
          }
          col = args_col[word[t]];
        }
        if (alive) value[row][col] += sign;
      }
      // Central in M_2 means scalar.
      bool scalar = value[0][1] == 0 && value[1][0] == 0 && value[0][0] == value[1][1];
      if (!scalar) {
        all_central = false;
        break;
      }
      if (value[0][0] != 0) saw_nonzero_scalar = true;
    }
  CHECK(all_central);
  CHECK(saw_nonzero_scalar);
}
