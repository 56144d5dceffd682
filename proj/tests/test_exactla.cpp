#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "codimlab/matrix.hpp"
#include "codimlab/subspace.hpp"

#include <algorithm>
#include <random>

using namespace codimlab;

namespace {

// Deterministic small-rational generator for property cases.
struct Rng {
  std::mt19937 gen{20240501};
  Rational next() {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    return make_rational(num(gen), den(gen));
  }
  RowVec vec(std::size_t dim) {
    RowVec v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      Rational r = next();
      if (r != 0) v.set(i, r);
    }
    return v;
  }
  Matrix matrix(std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) m.row(i) = vec(cols);
    return m;
  }
};

// Independent rank oracle: the rank is the largest k with a nonzero k x k
// minor, checked by exhaustive minor expansion.
Rational minor_det(const Matrix& m, const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols) {
  if (rows.empty()) return Rational(1);
  Rational det;
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  int sign = 1;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Rational& pivot = m.at(rows[0], cols[j]);
    if (pivot != 0) {
      std::vector<std::size_t> sub_cols;
      for (std::size_t jj = 0; jj < cols.size(); ++jj)
        if (jj != j) sub_cols.push_back(cols[jj]);
      det += Rational(sign) * pivot * minor_det(m, sub_rows, sub_cols);
    }
    sign = -sign;
  }
  return det;
}

std::size_t minor_rank_oracle(const Matrix& m) {
  std::size_t best = 0;
  std::size_t max_k = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= max_k; ++k) {
    bool found = false;
    std::vector<bool> row_mask(m.rows(), false);
    std::fill(row_mask.begin(), row_mask.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::vector<std::size_t> rows;
      for (std::size_t i = 0; i < m.rows(); ++i)
        if (row_mask[i]) rows.push_back(i);
      std::vector<bool> col_mask(m.cols(), false);
      std::fill(col_mask.begin(), col_mask.begin() + static_cast<std::ptrdiff_t>(k), true);
      do {
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < m.cols(); ++j)
          if (col_mask[j]) cols.push_back(j);
        if (minor_det(m, rows, cols) != 0) {
          found = true;
          break;
        }
      } while (std::prev_permutation(col_mask.begin(), col_mask.end()));
      if (found) break;
    } while (std::prev_permutation(row_mask.begin(), row_mask.end()));
    if (found)
      best = k;
    else
      break;
  }
  return best;
}

}  // namespace

TEST_CASE("rational parsing and canonical text") {
  CHECK(parse_rational("2/4") == make_rational(1, 2));
  CHECK(parse_rational("-6/4") == make_rational(-3, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(rational_text(make_rational(4, -8)) == "-1/2");
  CHECK(rational_text(Rational(0)) == "0");
  CHECK(rational_text(make_rational(6, 3)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("rowvec arithmetic and dense fallback") {
  RowVec v(10);
  v.set(3, Rational(2));
  v.set(7, make_rational(-1, 2));
  CHECK(v.nnz() == 2);
  CHECK(*v.leading() == 3);
  RowVec w(10);
  w.set(3, Rational(-2));
  v.add_scaled(w, Rational(1));
  CHECK(v.nnz() == 1);
  CHECK(v.at(3) == 0);
  // Force fill-in past 50%: storage switches, behaviour does not.
  for (std::size_t i = 0; i < 9; ++i) v.set(i, Rational(1));
  CHECK(v.nnz() == 9);
  CHECK(v.at(7) == make_rational(1, 1));
  RowVec u = RowVec::from_entries(10, {{5, Rational(1)}, {5, Rational(-1)}, {2, Rational(3)}});
  CHECK(u.nnz() == 1);
  CHECK(u.at(2) == Rational(3));
}

TEST_CASE("rref: identity and proportional rows") {
  Matrix id = Matrix::identity(2);
  auto [r1, rank1] = id.rref();
  CHECK(rank1 == 2);
  CHECK(r1 == id);

  Matrix m = Matrix::from_literal({{1, 2}, {2, 4}});
  auto [r2, rank2] = m.rref();
  CHECK(rank2 == 1);
  CHECK(r2.at(0, 0) == 1);
  CHECK(r2.at(0, 1) == 2);
  CHECK(r2.row(1).is_zero());
}

TEST_CASE("rref rank matches determinant-minor oracle on random 5x5") {
  Rng rng;
  for (int trial = 0; trial < 8; ++trial) {
    Matrix m = rng.matrix(5, 5);
    if (trial % 2 == 0) m.row(4) = m.row(0);  // force some degeneracy
    CHECK(m.rref().second == minor_rank_oracle(m));
  }
}

TEST_CASE("rref is idempotent and row-permutation canonical") {
  Rng rng;
  for (int trial = 0; trial < 6; ++trial) {
    Matrix m = rng.matrix(4, 6);
    auto [r, rank] = m.rref();
    auto [rr, rank2] = r.rref();
    CHECK(rank == rank2);
    CHECK(r == rr);
    // Any row permutation yields the same reduced form.
    std::vector<RowVec> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(m.rows() - 1 - i));
    Matrix p = Matrix::from_rows(m.cols(), rows);
    CHECK(p.rref().first == r);
  }
}

TEST_CASE("subspace sum and intersection basics") {
  Subspace zero = Subspace::zero(3);
  Subspace e1 = Subspace::span(3, {RowVec::unit(3, 0)});
  Subspace e2 = Subspace::span(3, {RowVec::unit(3, 1)});
  CHECK(e1.sum(zero) == e1);
  Subspace e12 = e1.sum(e2);
  CHECK(e12.dim() == 2);
  CHECK(e12.contains(RowVec::unit(3, 0)));
  CHECK(e12.contains(RowVec::unit(3, 1)));
  CHECK(e1.intersect(e1) == e1);
  CHECK(e1.intersect(e2).is_zero());
  CHECK_THROWS_AS(e1.sum(Subspace::zero(4)), std::invalid_argument);
  CHECK_THROWS_AS(e1.intersect(Subspace::zero(4)), std::invalid_argument);
}

TEST_CASE("dimension formula and membership on random pairs in Q^4") {
  Rng rng;
  for (int trial = 0; trial < 10; ++trial) {
    Subspace a = Subspace::span(4, {rng.vec(4), rng.vec(4)});
    Subspace b = Subspace::span(4, {rng.vec(4), rng.vec(4), rng.vec(4)});
    Subspace inter = a.intersect(b);
    Subspace sum = a.sum(b);
    CHECK(sum.dim() + inter.dim() == a.dim() + b.dim());
    for (const auto& row : inter.basis()) {
      CHECK(a.contains(row));
      CHECK(b.contains(row));
    }
    CHECK(sum.contains(a));
    CHECK(sum.contains(b));
  }
}

TEST_CASE("subspace equality is canonical-basis equality") {
  Rng rng;
  for (int trial = 0; trial < 6; ++trial) {
    RowVec v1 = rng.vec(5), v2 = rng.vec(5);
    Subspace s1 = Subspace::span(5, {v1, v2});
    // Same span from shuffled, rescaled generators.
    RowVec w1 = v2;
    w1.scale(Rational(3));
    RowVec w2 = v1;
    w2.add_scaled(v2, make_rational(-5, 2));
    Subspace s2 = Subspace::span(5, {w1, w2, v1});
    CHECK(s1 == s2);
  }
}

TEST_CASE("rank accumulator: trivial streams") {
  RankAccumulator acc(6);
  RowVec v = RowVec::unit(6, 2);
  v.set(4, Rational(5));
  for (int i = 0; i < 7; ++i) acc.insert(v);
  CHECK(acc.rank() == 1);

  RankAccumulator basis(6);
  for (std::size_t i = 0; i < 6; ++i) basis.insert(RowVec::unit(6, i));
  CHECK(basis.rank() == 6);
  CHECK_THROWS_AS(basis.insert(RowVec(5)), std::invalid_argument);
}

TEST_CASE("rank accumulator is stream-order invariant") {
  Rng rng;
  std::vector<RowVec> stream;
  for (int i = 0; i < 12; ++i) stream.push_back(rng.vec(7));
  RankAccumulator forward(7);
  for (const auto& v : stream) forward.insert(v);
  RankAccumulator backward(7);
  for (auto it = stream.rbegin(); it != stream.rend(); ++it) backward.insert(*it);
  CHECK(forward.rank() == backward.rank());
  CHECK(forward.to_subspace() == backward.to_subspace());
  // Rank agrees with the dense matrix rank.
  CHECK(forward.rank() == Matrix::from_rows(7, stream).rref().second);
}

TEST_CASE("partitioned accumulation merges deterministically") {
  Rng rng;
  std::vector<RowVec> stream;
  for (int i = 0; i < 16; ++i) stream.push_back(rng.vec(6));
  RankAccumulator whole(6);
  for (const auto& v : stream) whole.insert(v);
  RankAccumulator part1(6), part2(6);
  for (std::size_t i = 0; i < stream.size(); ++i)
    (i % 2 ? part1 : part2).insert(stream[i]);
  part1.merge(std::move(part2));
  CHECK(part1.rank() == whole.rank());
  CHECK(part1.to_subspace() == whole.to_subspace());
}

TEST_CASE("solve_linear finds canonical particular solutions") {
  Matrix a = Matrix::from_literal({{1, 2, 0}, {0, 0, 1}});
  RowVec b(2);
  b.set(0, Rational(4));
  b.set(1, Rational(-1));
  auto x = solve_linear(a, b);
  REQUIRE(x.has_value());
  CHECK(a.apply(*x).at(0) == Rational(4));
  CHECK(a.apply(*x).at(1) == Rational(-1));
  CHECK(x->at(1) == 0);  // free variable pinned to zero
  Matrix bad = Matrix::from_literal({{1, 1}, {1, 1}});
  RowVec rhs(2);
  rhs.set(0, Rational(1));
  CHECK_FALSE(solve_linear(bad, rhs).has_value());
}
