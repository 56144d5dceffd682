#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "codimlab/codim.hpp"
#include "fixtures.hpp"

using namespace codimlab;
using namespace codimlab::testing;

namespace {

// Independent brute-force oracle: materialize the full dense evaluation
// matrix (one row per monomial, all n! m^n of them) and compute its rank by
// fraction-free (Bareiss) elimination over integers after clearing
// denominators.  Shares no code with the streaming accumulator.
std::size_t oracle_codim(const LieAlgebra& l, const ActionSpec& a, std::size_t n) {
  const std::size_t d = l.dim();
  if (d == 0) return 0;
  std::size_t cols = 1;
  for (std::size_t i = 0; i <= n; ++i) cols *= d;
  // Enumerate monomials: permutations x labels over the effective basis.
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < n; ++i) perm.push_back(i);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::size_t label_count = 1;
  for (std::size_t i = 0; i < n; ++i) label_count *= a.effective.size();
  std::vector<std::vector<Rational>> dense;
  std::vector<std::size_t> labels(n);
  for (const auto& p : perms)
    for (std::size_t lr = 0; lr < label_count; ++lr) {
      std::size_t rest = lr;
      for (std::size_t t = 0; t < n; ++t) {
        labels[t] = a.effective[rest % a.effective.size()];
        rest /= a.effective.size();
      }
      // Evaluate on every basis tuple directly.
      std::vector<Rational> row(cols);
      std::vector<std::size_t> tuple(n, 0);
      while (true) {
        RowVec value(d);
        bool first = true;
        for (std::size_t t = 0; t < n; ++t) {
          RowVec arg = a.operators[labels[t]].apply(RowVec::unit(d, tuple[p[t]]));
          value = first ? arg : l.bracket(value, arg);
          first = false;
        }
        std::size_t base = 0;
        for (std::size_t v : tuple) base = base * d + v;
        for (std::size_t o = 0; o < d; ++o) row[base * d + o] = value.at(o);
        std::size_t pos = n;
        while (pos > 0) {
          if (++tuple[pos - 1] < d) break;
          tuple[pos - 1] = 0;
          --pos;
        }
        if (pos == 0) break;
      }
      dense.push_back(std::move(row));
    }
  // Clear denominators per row, then Bareiss elimination on integers.
  std::vector<std::vector<Integer>> mat;
  for (const auto& row : dense) {
    Integer lcm_den = 1;
    for (const auto& v : row) lcm_den = lcm(lcm_den, Integer(denominator(v)));
    std::vector<Integer> irow;
    irow.reserve(cols);
    for (const auto& v : row)
      irow.push_back(Integer(numerator(v)) * (lcm_den / Integer(denominator(v))));
    mat.push_back(std::move(irow));
  }
  const std::size_t rows = mat.size();
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r)
      if (mat[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot == rows) continue;
    std::swap(mat[rank], mat[pivot]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c)
        mat[r][c] = (mat[rank][col] * mat[r][c] - mat[r][col] * mat[rank][c]) / prev;
      mat[r][col] = 0;
    }
    prev = mat[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("codim_hopf trivial cases") {
  auto l = sl2();
  auto a = trivial_action(3);
  CHECK(codim_hopf(l, a, 1).value == 1);
  auto ab = LieAlgebra::abelian(2);
  auto ta = trivial_action(2);
  CHECK(codim_hopf(ab, ta, 2).value == 0);
  CHECK(codim_hopf(ab, ta, 3).value == 0);
  CHECK_THROWS_AS(codim_hopf(l, a, 0), std::invalid_argument);
}

TEST_CASE("ordinary codimensions of sl2 match the dense oracle") {
  auto l = sl2();
  auto a = trivial_action(3);
  CHECK(codim_ordinary(l, 1).value == 1);
  CHECK(codim_ordinary(l, 2).value == 1);
  for (std::size_t n = 1; n <= 4; ++n)
    CHECK(codim_ordinary(l, n).value == oracle_codim(l, a, n));
}

TEST_CASE("ordinary codimensions: Heisenberg vanishes from n = 3") {
  auto l = heisenberg();
  CHECK(codim_ordinary(l, 1).value == 1);
  CHECK(codim_ordinary(l, 2).value == 1);
  CHECK(codim_ordinary(l, 3).value == 0);
  CHECK(codim_ordinary(l, 4).value == 0);
  CHECK(codim_ordinary(l, 5).value == 0);
}

TEST_CASE("oracle equivalence for small fixtures across modes") {
  auto s2 = solvable2();
  auto ta2 = trivial_action(2);
  for (std::size_t n = 1; n <= 4; ++n)
    CHECK(codim_ordinary(s2, n).value == oracle_codim(s2, ta2, n));
  auto h3 = heisenberg();
  auto ta3 = trivial_action(3);
  for (std::size_t n = 1; n <= 4; ++n)
    CHECK(codim_ordinary(h3, n).value == oracle_codim(h3, ta3, n));
}

TEST_CASE("graded codimension: trivial grading reduces to ordinary") {
  auto l = sl2();
  Grading g;
  g.group = GroupSpec::trivial();
  g.degrees.assign(3, g.group.identity());
  for (std::size_t n = 1; n <= 4; ++n)
    CHECK(codim_graded(l, g, n).value == codim_ordinary(l, n).value);
}

TEST_CASE("graded equals hopf over the dual action: Z2-graded gl2") {
  auto l = gl2();
  auto g = gl2_z2_grading();
  auto a = from_grading(l, g);
  for (std::size_t n = 1; n <= 4; ++n) {
    auto graded = codim_graded(l, g, n);
    auto hopf = codim_hopf(l, a, n);
    CHECK(graded.value == hopf.value);
  }
}

TEST_CASE("codim_hopf is invariant under change of effective operator basis") {
  auto l = gl2();
  auto a = from_grading(l, gl2_z2_grading());
  ActionSpec alt = a;
  alt.operators[0] = Matrix::identity(4);  // p0 + p1
  alt.operators[1] = a.operators[0].plus(a.operators[1].scaled(Rational(-1)));  // p0 - p1
  alt.compute_effective_basis();
  for (std::size_t n = 1; n <= 3; ++n)
    CHECK(codim_hopf(l, a, n).value == codim_hopf(l, alt, n).value);
}

TEST_CASE("gaction sandwich: psi on gl2 and swap on sl2+sl2") {
  auto l = gl2();
  GroupSpec z2 = GroupSpec::from_table({"e", "psi"}, {{0, 1}, {1, 0}});
  std::map<std::string, Matrix> gens{{"psi", gl2_psi_matrix()}};
  std::vector<CodimReport> reports;
  for (std::size_t n = 1; n <= 3; ++n) {
    reports.push_back(codim_ordinary(l, n));
    reports.push_back(codim_gaction(l, z2, gens, n));
  }
  CHECK(bounds_audit(reports, 4, 2).empty());
  // c_2^G within [c_2, 2^2 c_2].
  auto c2 = codim_ordinary(l, 2).value;
  auto c2g = codim_gaction(l, z2, gens, 2).value;
  CHECK(c2 <= c2g);
  CHECK(c2g <= 4 * c2);

  auto ss = sl2_plus_sl2();
  GroupSpec z2s = GroupSpec::from_table({"e", "s"}, {{0, 1}, {1, 0}});
  Matrix swap(6, 6);
  for (std::size_t i = 0; i < 3; ++i) {
    swap.set(i, 3 + i, Rational(1));
    swap.set(3 + i, i, Rational(1));
  }
  std::map<std::string, Matrix> sgens{{"s", swap}};
  std::vector<CodimReport> sreports;
  for (std::size_t n = 1; n <= 3; ++n) {
    sreports.push_back(codim_ordinary(ss, n));
    sreports.push_back(codim_gaction(ss, z2s, sgens, n));
  }
  CHECK(bounds_audit(sreports, 6, 2).empty());
}

TEST_CASE("inclusion-exclusion: abelian grading is a single term") {
  auto l = gl2();
  auto g = gl2_z2_grading();
  for (std::size_t n = 1; n <= 3; ++n)
    CHECK(inclusion_exclusion_graded(l, g, n) == codim_graded(l, g, n).value);
}

TEST_CASE("inclusion-exclusion matches codim_graded on the S3-graded algebra") {
  auto l = gl4sub();
  auto g = gl4sub_s3_grading();
  for (std::size_t n = 1; n <= 3; ++n)
    CHECK(inclusion_exclusion_graded(l, g, n) == codim_graded(l, g, n).value);
}

TEST_CASE("direct sums never shrink codimensions") {
  auto l1 = sl2();
  auto sum = sl2_plus_sl2();
  for (std::size_t n = 1; n <= 3; ++n) {
    auto c_part = codim_ordinary(l1, n).value;
    auto c_sum = codim_ordinary(sum, n).value;
    CHECK(c_sum >= c_part);
  }
}

TEST_CASE("nilpotent vanishing across modes at the nilpotency index") {
  auto h3 = heisenberg();
  auto [nil, p] = h3.nilradical();
  CHECK(nil.dim() == 3);
  CHECK(p == 3);
  for (std::size_t n = p; n <= p + 2; ++n) {
    CHECK(codim_ordinary(h3, n).value == 0);
    CHECK(codim_hopf(h3, trivial_action(3), n).value == 0);
  }
}

TEST_CASE("codim value is independent of the thread count") {
  auto l = gl2();
  auto a = from_grading(l, gl2_z2_grading());
  CodimOptions one, four;
  one.threads = 1;
  four.threads = 4;
  for (std::size_t n = 1; n <= 4; ++n)
    CHECK(codim_hopf(l, a, n, one).value == codim_hopf(l, a, n, four).value);
}

TEST_CASE("resource ceilings raise structured errors") {
  auto l = gl2();
  CodimOptions tight;
  tight.max_coordinates = 10;
  CHECK_THROWS_AS(codim_ordinary(l, 3, tight), ResourceCeiling);
  CodimOptions few;
  few.max_monomials = 2;
  CHECK_THROWS_AS(codim_ordinary(l, 3, few), ResourceCeiling);
}
