#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "codimlab/exponent.hpp"
#include "fixtures.hpp"

using namespace codimlab;
using namespace codimlab::testing;

TEST_CASE("check_certificate: sl2 with the full certificate gives 3") {
  auto l = sl2();
  auto a = trivial_action(3);
  ExponentCertificate cert;
  cert.pairs.emplace_back(Subspace::full(3), Subspace::zero(3));
  cert.complements.push_back(Subspace::full(3));
  cert.powers.push_back(0);
  auto result = check_certificate(l, a, cert);
  REQUIRE(std::holds_alternative<std::size_t>(result));
  CHECK(std::get<std::size_t>(result) == 3);
}

TEST_CASE("check_certificate: empty tuple gives 0") {
  auto l = sl2();
  auto a = trivial_action(3);
  auto result = check_certificate(l, a, {});
  REQUIRE(std::holds_alternative<std::size_t>(result));
  CHECK(std::get<std::size_t>(result) == 0);
}

TEST_CASE("check_certificate: gl2 graded certificate with I = Z + sl2-part") {
  auto l = gl2();
  auto a = from_grading(l, gl2_z2_grading());
  Subspace z = l.center();
  Subspace i = z.sum(l.derived_subalgebra());
  ExponentCertificate cert;
  cert.pairs.emplace_back(i, z);
  cert.complements.push_back(l.derived_subalgebra());
  cert.powers.push_back(0);
  auto result = check_certificate(l, a, cert);
  REQUIRE(std::holds_alternative<std::size_t>(result));
  CHECK(std::get<std::size_t>(result) == 3);  // the center annihilates the factor
}

TEST_CASE("check_certificate rejects broken inputs with reasons") {
  auto l = gl2();
  auto a = trivial_action(4);
  Subspace z = l.center();
  Subspace i = z.sum(l.derived_subalgebra());
  // Not nested.
  ExponentCertificate bad1;
  bad1.pairs.emplace_back(z, i);
  bad1.complements.push_back(z);
  bad1.powers.push_back(0);
  auto r1 = check_certificate(l, a, bad1);
  REQUIRE(std::holds_alternative<std::vector<std::string>>(r1));
  // Reducible factor: gl2 / 0 is not irreducible.
  ExponentCertificate bad2;
  bad2.pairs.emplace_back(Subspace::full(4), Subspace::zero(4));
  bad2.complements.push_back(Subspace::full(4));
  bad2.powers.push_back(0);
  auto r2 = check_certificate(l, a, bad2);
  REQUIRE(std::holds_alternative<std::vector<std::string>>(r2));
  // Wrong complement.
  ExponentCertificate bad3;
  bad3.pairs.emplace_back(i, z);
  bad3.complements.push_back(z);
  bad3.powers.push_back(0);
  auto r3 = check_certificate(l, a, bad3);
  REQUIRE(std::holds_alternative<std::vector<std::string>>(r3));
}

TEST_CASE("condition2_check basics") {
  auto l = sl2();
  auto r1 = condition2_check(l, {Subspace::full(3)});
  CHECK(r1.satisfiable);
  CHECK(r1.powers == std::vector<std::size_t>{0});

  // T inside the center of a nilpotent algebra: all brackets die.
  auto h = heisenberg();
  Subspace center = h.center();
  auto r2 = condition2_check(h, {center, center});
  CHECK_FALSE(r2.satisfiable);
  CHECK_FALSE(r2.exhausted);

  // The two sl2 blocks of sl2 + sl2 never bracket together.
  auto ss = sl2_plus_sl2();
  std::vector<RowVec> first, second;
  for (std::size_t i = 0; i < 3; ++i) {
    first.push_back(RowVec::unit(6, i));
    second.push_back(RowVec::unit(6, 3 + i));
  }
  auto r3 = condition2_check(ss, {Subspace::span(6, first), Subspace::span(6, second)});
  CHECK_FALSE(r3.satisfiable);
}

TEST_CASE("d_semisimple: sl2, sl2+sl2, and the swap action") {
  auto one = d_semisimple(sl2(), trivial_action(3));
  CHECK(one.d == 3);
  CHECK(one.exactness == Exactness::Exact);
  CHECK(one.method == ExponentMethod::Semisimple);

  auto two = d_semisimple(sl2_plus_sl2(), trivial_action(6));
  CHECK(two.d == 3);

  auto swapped = d_semisimple(sl2_plus_sl2(), sl2sl2_swap_action());
  CHECK(swapped.d == 6);  // single H-simple component

  CHECK_THROWS_AS(d_semisimple(gl2(), trivial_action(4)), NotSemisimple);
}

TEST_CASE("composition chain of gl2 refines 0 in Z in gl2") {
  auto l = gl2();
  auto a = trivial_action(4);
  auto chain = composition_chain(l, a);
  REQUIRE(chain.ideals.size() == 3);
  CHECK(chain.ideals[0].dim() == 4);
  CHECK(chain.ideals[1] == l.center());
  CHECK(chain.ideals[2].is_zero());
  CHECK(chain.split_certified);
  CHECK(chain.factors.size() == 2);
  CHECK(chain.factors[0].annihilator == l.center());
  CHECK(chain.factors[1].annihilator.dim() == 4);
}

TEST_CASE("d_search: nilpotent, reductive, graded, semidirect") {
  auto h = d_search(heisenberg(), trivial_action(3));
  CHECK(h.d == 0);
  CHECK(h.exactness == Exactness::Exact);
  CHECK_FALSE(h.certificate.has_value());

  auto g = d_search(gl2(), trivial_action(4));
  CHECK(g.d == 3);
  CHECK(g.exactness == Exactness::Exact);
  REQUIRE(g.certificate.has_value());
  auto check = check_certificate(gl2(), trivial_action(4), *g.certificate);
  REQUIRE(std::holds_alternative<std::size_t>(check));
  CHECK(std::get<std::size_t>(check) == 3);

  auto sd = d_search(sl2_semidirect_q2(), trivial_action(5));
  CHECK(sd.d == 3);

  auto graded = d_search(gl2(), from_grading(gl2(), gl2_z2_grading()));
  CHECK(graded.d == 3);
  CHECK(graded.exactness == Exactness::Exact);
}

TEST_CASE("d_search on the S3-graded gl2+gl2 gives 3") {
  auto l = gl4sub();
  auto a = from_grading(l, gl4sub_s3_grading());
  auto report = d_search(l, a);
  CHECK(report.d == 3);
  REQUIRE(report.certificate.has_value());
  auto check = check_certificate(l, a, *report.certificate);
  REQUIRE(std::holds_alternative<std::size_t>(check));
  CHECK(std::get<std::size_t>(check) == 3);
  // The two central lines are isomorphic trivial factors, so the chain search
  // reports a lower bound.
  CHECK(report.exactness == Exactness::LowerBound);
}

TEST_CASE("simplicity criterion across fixtures") {
  auto s = simplicity_criterion(sl2(), trivial_action(3));
  CHECK(s.d_equals_dim);
  CHECK(s.semisimple);
  CHECK(s.h_simple);

  auto g = simplicity_criterion(gl2(), trivial_action(4));
  CHECK_FALSE(g.d_equals_dim);
  CHECK_FALSE(g.semisimple);
  CHECK_FALSE(g.h_simple);

  auto swapped = simplicity_criterion(sl2_plus_sl2(), sl2sl2_swap_action());
  CHECK(swapped.d_equals_dim);
  CHECK(swapped.semisimple);
  CHECK(swapped.h_simple);

  auto plain = simplicity_criterion(sl2_plus_sl2(), trivial_action(6));
  CHECK_FALSE(plain.d_equals_dim);
  CHECK(plain.semisimple);
  CHECK_FALSE(plain.h_simple);
}

TEST_CASE("sum rule: nilpotent summands contribute nothing") {
  std::vector<LieAlgebra> parts{sl2(), heisenberg()};
  std::vector<ActionSpec> actions{trivial_action(3), trivial_action(3)};
  CHECK(sum_rule_check(parts, actions).empty());

  std::vector<LieAlgebra> two_sl2{sl2(), sl2()};
  std::vector<ActionSpec> two_triv{trivial_action(3), trivial_action(3)};
  CHECK(sum_rule_check(two_sl2, two_triv).empty());

  std::vector<LieAlgebra> mixed{gl2(), heisenberg()};
  std::vector<ActionSpec> mixed_act{trivial_action(4), trivial_action(3)};
  CHECK(sum_rule_check(mixed, mixed_act).empty());
}

TEST_CASE("invariant complements are invariant and complement") {
  auto l = gl2();
  auto a = from_grading(l, gl2_z2_grading());
  auto levi = levi_for_action(l, a);
  CHECK(levi == l.derived_subalgebra());
  Subspace z = l.center();
  Subspace i = z.sum(l.derived_subalgebra());
  auto t = invariant_complement(l, a, levi, i, z);
  REQUIRE(t.has_value());
  CHECK(t->sum(z) == i);
  CHECK(t->intersect(z).is_zero());
  CHECK(invariant(a, *t));
  CHECK(t->contains(l.bracket_subspaces(levi, *t)));
}

TEST_CASE("monotonicity: adding an absorbing pair never decreases d") {
  // For gl2, the singleton {sl2-factor} achieves 3; adding the central factor
  // (annihilator = L) keeps the intersection unchanged, and the certificate
  // checker accepts supersets when Condition 2 holds.
  auto l = gl2();
  auto a = trivial_action(4);
  Subspace z = l.center();
  Subspace i = z.sum(l.derived_subalgebra());
  ExponentCertificate small;
  small.pairs.emplace_back(i, z);
  small.complements.push_back(l.derived_subalgebra());
  small.powers.push_back(0);
  auto small_d = std::get<std::size_t>(check_certificate(l, a, small));
  ExponentCertificate big = small;
  big.pairs.emplace_back(z, Subspace::zero(4));
  big.complements.push_back(z);
  big.powers.push_back(0);
  auto big_result = check_certificate(l, a, big);
  if (std::holds_alternative<std::size_t>(big_result))
    CHECK(std::get<std::size_t>(big_result) >= small_d);
  else
    CHECK(small_d == 3);  // the superset may fail Condition 2; the value stands
}

TEST_CASE("d never exceeds dim L - dim N") {
  for (const auto& l : {gl2(), sl2_semidirect_q2()}) {
    auto a = trivial_action(l.dim());
    auto [nil, p] = l.nilradical();
    (void)p;
    auto report = d_search(l, a);
    CHECK(report.d <= l.dim() - nil.dim());
  }
}

TEST_CASE("empirical exponent table") {
  auto rows = empirical_exponent({0, 0, 0}, 3);
  for (const auto& row : rows) {
    CHECK(row.root == 0.0);
    CHECK(row.within_dim_bound);
  }
  auto sl2_rows = empirical_exponent({1, 1, 2, 5}, 3);
  for (const auto& row : sl2_rows) CHECK(row.within_dim_bound);
  CHECK_THROWS_AS(empirical_exponent({1}, 3), std::invalid_argument);
}
