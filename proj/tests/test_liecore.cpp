#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "codimlab/lie.hpp"
#include "fixtures.hpp"

#include <random>

using namespace codimlab;
using namespace codimlab::testing;

namespace {

// Direct triple-by-triple Jacobi oracle, independent of validate().
bool jacobi_holds(const LieAlgebra& l) {
  const std::size_t d = l.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        RowVec ei = RowVec::unit(d, i), ej = RowVec::unit(d, j), ek = RowVec::unit(d, k);
        RowVec sum = l.bracket(l.bracket(ei, ej), ek);
        sum.add_scaled(l.bracket(l.bracket(ej, ek), ei), Rational(1));
        sum.add_scaled(l.bracket(l.bracket(ek, ei), ej), Rational(1));
        if (!sum.is_zero()) return false;
      }
  return true;
}

// Smallest ideal containing a subspace, by closure.
Subspace ideal_closure(const LieAlgebra& l, const Subspace& seed) {
  Subspace current = seed;
  while (true) {
    Subspace next = current.sum(l.bracket_subspaces(Subspace::full(l.dim()), current));
    if (next == current) return current;
    current = next;
  }
}

}  // namespace

TEST_CASE("validate accepts textbook sl2") {
  CHECK(sl2().validate().empty());
  CHECK(jacobi_holds(sl2()));
  CHECK(gl2().validate().empty());
  CHECK(heisenberg().validate().empty());
  CHECK(sl2_semidirect_q2().validate().empty());
}

TEST_CASE("validate reports alternation violation") {
  std::vector<std::vector<RowVec>> c(2, std::vector<RowVec>(2, RowVec(2)));
  c[0][1].set(0, Rational(1));
  c[1][0].set(0, Rational(1));  // should be -1
  LieAlgebra bad({"a", "b"}, std::move(c));
  auto violations = bad.validate();
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].kind == LieViolation::Kind::Alternation);
  CHECK(violations[0].i == 0);
  CHECK(violations[0].j == 1);
}

TEST_CASE("validate catches Jacobi violations of a perturbed sl2") {
  // Corrupt one constant: [e, f] = h + e.
  auto bad = make_lie({"e", "h", "f"}, {{0, 2, 1, Rational(1)},
                                        {0, 2, 0, Rational(1)},
                                        {1, 0, 0, Rational(2)},
                                        {1, 2, 2, Rational(-2)}});
  CHECK_FALSE(jacobi_holds(bad));
  auto violations = bad.validate();
  REQUIRE_FALSE(violations.empty());
  for (const auto& v : violations) CHECK(v.kind == LieViolation::Kind::Jacobi);
}

TEST_CASE("bracket_subspaces basics") {
  auto l = sl2();
  CHECK(l.bracket_subspaces(Subspace::full(3), Subspace::zero(3)).is_zero());
  Subspace h = Subspace::span(3, {RowVec::unit(3, 1)});
  Subspace e = Subspace::span(3, {RowVec::unit(3, 0)});
  CHECK(l.bracket_subspaces(h, e) == e);  // [h, e] = 2e
}

TEST_CASE("bracket_subspaces lands inside the ideal closure") {
  std::mt19937 gen(7);
  auto l = gl2();
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int trial = 0; trial < 6; ++trial) {
    RowVec u(4), v(4);
    for (std::size_t i = 0; i < 4; ++i) {
      u.set(i, Rational(coeff(gen)));
      v.set(i, Rational(coeff(gen)));
    }
    Subspace su = Subspace::span(4, {u});
    Subspace sv = Subspace::span(4, {v});
    Subspace bracket = l.bracket_subspaces(su, sv);
    CHECK(ideal_closure(l, su.sum(sv)).contains(bracket));
  }
}

TEST_CASE("solvable radical: semisimple, solvable, reductive") {
  CHECK(sl2().solvable_radical().is_zero());
  CHECK(solvable2().solvable_radical().dim() == 2);

  auto l = gl2();
  Subspace r = l.solvable_radical();
  CHECK(r.dim() == 1);
  RowVec identity(4);
  identity.set(0, Rational(1));
  identity.set(3, Rational(1));
  CHECK(r.contains(identity));
  CHECK(r == l.center());
  // Maximality: every ideal in the chain {0 ⊂ Z ⊂ Z+sl2-part ⊂ gl2} that is
  // solvable sits inside R.
  Subspace z = l.center();
  Subspace sl2_part = l.derived_subalgebra();
  CHECK(sl2_part.dim() == 3);
  Subspace z_plus = z.sum(sl2_part);
  for (const auto& ideal : {z, z_plus, Subspace::full(4)}) {
    LieAlgebra restricted = l.restrict_to(ideal);
    if (restricted.is_solvable()) CHECK(r.contains(ideal));
  }
}

TEST_CASE("nilradical with nilpotency index") {
  auto [n_h3, p_h3] = heisenberg().nilradical();
  CHECK(n_h3.dim() == 3);
  CHECK(p_h3 == 3);  // products of three elements vanish, pairs do not

  auto [n_sl2, p_sl2] = sl2().nilradical();
  CHECK(n_sl2.is_zero());
  CHECK(p_sl2 == 1);

  auto l = gl2();
  auto [n_gl2, p_gl2] = l.nilradical();
  CHECK(n_gl2 == l.center());
  CHECK(p_gl2 == 2);  // abelian and nonzero
  // Brute-force maximality check over the composition-chain family:
  // no larger candidate ideal is nilpotent.
  Subspace sl2_part = l.derived_subalgebra();
  for (const auto& ideal : {sl2_part, l.center().sum(sl2_part), Subspace::full(4)}) {
    LieAlgebra restricted = l.restrict_to(ideal);
    CHECK_FALSE(restricted.is_nilpotent());
  }

  auto [n_sd, p_sd] = sl2_semidirect_q2().nilradical();
  CHECK(n_sd.dim() == 2);
  CHECK(p_sd == 2);
}

TEST_CASE("levi decomposition postconditions") {
  auto check_levi = [](const LieAlgebra& l, std::size_t levi_dim, std::size_t s_dim) {
    auto [levi, s] = l.levi_decomposition();
    CHECK(levi.dim() == levi_dim);
    CHECK(s.dim() == s_dim);
    Subspace radical = l.solvable_radical();
    auto [nil, p] = l.nilradical();
    (void)p;
    CHECK(levi.sum(radical).dim() == l.dim());
    CHECK(levi.intersect(radical).is_zero());
    CHECK(l.is_subalgebra(levi));
    CHECK(l.bracket_subspaces(levi, s).is_zero());
    CHECK(s.sum(nil) == radical);
    // B ⊕ S ⊕ N = L as subspaces.
    CHECK(levi.sum(s).sum(nil).dim() == l.dim());
  };
  check_levi(sl2(), 3, 0);
  check_levi(gl2(), 3, 0);  // N = Z, so S = 0
  check_levi(sl2_semidirect_q2(), 3, 0);
  check_levi(heisenberg(), 0, 0);
  // A reductive example where S is nonzero: sl2 ⊕ Q (abelian summand is the
  // whole radical; its nilradical is itself, so S = 0 there too — instead use
  // a direct check that the S returned for gl2-like algebras centralizes B.)
  auto l = LieAlgebra::direct_sum(sl2(), LieAlgebra::abelian(1));
  auto [levi, s] = l.levi_decomposition();
  CHECK(levi.dim() == 3);
  CHECK(l.bracket_subspaces(levi, s).is_zero());
}

TEST_CASE("levi of semisimple algebra is everything") {
  auto l = sl2_plus_sl2();
  auto [levi, s] = l.levi_decomposition();
  CHECK(levi.dim() == 6);
  CHECK(s.is_zero());
}

TEST_CASE("annihilator examples") {
  auto ab = LieAlgebra::abelian(2);
  CHECK(ab.annihilator(Subspace::full(2), Subspace::zero(2)).dim() == 2);

  auto l = sl2();
  CHECK(l.annihilator(Subspace::full(3), Subspace::zero(3)).is_zero());

  auto g = gl2();
  // Factor (Z + sl2-part)/Z ≅ sl2 has annihilator exactly the center.
  Subspace z = g.center();
  Subspace i = z.sum(g.derived_subalgebra());
  Subspace ann = g.annihilator(i, z);
  CHECK(ann == z);
  // Direct membership scan: each annihilator basis vector kills I modulo J.
  for (const auto& x : ann.basis())
    for (const auto& u : i.basis()) CHECK(z.contains(g.bracket(x, u)));
  CHECK_THROWS_AS(g.annihilator(z, i), NotNested);
}

TEST_CASE("direct sums keep summands as ideals and validate") {
  auto l = sl2_plus_sl2();
  CHECK(l.dim() == 6);
  CHECK(l.validate().empty());
  std::vector<RowVec> first, second;
  for (std::size_t i = 0; i < 3; ++i) {
    first.push_back(RowVec::unit(6, i));
    second.push_back(RowVec::unit(6, 3 + i));
  }
  CHECK(l.is_ideal(Subspace::span(6, first)));
  CHECK(l.is_ideal(Subspace::span(6, second)));

  auto with_zero = LieAlgebra::direct_sum(sl2(), LieAlgebra::zero());
  CHECK(with_zero.dim() == 3);
  CHECK(with_zero.killing_nondegenerate());
}

TEST_CASE("quotient algebra: gl2 / center is sl2-like") {
  auto l = gl2();
  Matrix section, projection;
  LieAlgebra q = l.quotient(l.center(), &section, &projection);
  CHECK(q.dim() == 3);
  CHECK(q.validate().empty());
  CHECK(q.killing_nondegenerate());
  CHECK(q.solvable_radical().is_zero());
}

TEST_CASE("series and structure report") {
  auto l = sl2_semidirect_q2();
  auto report = l.structure_report();
  CHECK(report.solvable_radical.dim() == 2);
  CHECK(report.nilradical.dim() == 2);
  CHECK(report.nilpotency_index == 2);
  REQUIRE(report.levi.has_value());
  CHECK(report.levi->dim() == 3);
  CHECK(report.center.is_zero());
  CHECK(report.lower_central_series.front().dim() == 5);

  auto h = heisenberg();
  auto hr = h.structure_report();
  CHECK(hr.center.dim() == 1);
  CHECK(hr.lower_central_series.back().is_zero());
  CHECK(hr.nilpotency_index == 3);
  // Solvable radical of L/R is zero (computed on the quotient).
  auto g = gl2();
  LieAlgebra mod_r = g.quotient(g.solvable_radical());
  CHECK(mod_r.solvable_radical().is_zero());
}

TEST_CASE("zero algebra conventions") {
  auto z = LieAlgebra::zero();
  CHECK(z.dim() == 0);
  CHECK(z.validate().empty());
  CHECK(z.solvable_radical().is_zero());
  auto [n, p] = z.nilradical();
  CHECK(n.is_zero());
  CHECK(p == 1);
}
