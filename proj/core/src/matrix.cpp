#include "codimlab/matrix.hpp"

#include <stdexcept>

namespace codimlab {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  data_.assign(rows, RowVec(cols));
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Rational(1));
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, std::vector<RowVec> rows) {
  Matrix m;
  m.rows_ = rows.size();
  m.cols_ = cols;
  for (const auto& r : rows)
    if (r.dim() != cols) throw std::invalid_argument("Matrix::from_rows width mismatch");
  m.data_ = std::move(rows);
  return m;
}

Matrix Matrix::from_literal(std::initializer_list<std::initializer_list<long long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ragged matrix literal");
    std::size_t j = 0;
    for (long long v : row) {
      if (v != 0) m.set(i, j, Rational(v));
      ++j;
    }
    ++i;
  }
  return m;
}

Matrix Matrix::multiply(const Matrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("Matrix::multiply shape mismatch");
  Matrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    RowVec& target = out.data_[i];
    data_[i].for_each([&](std::size_t k, const Rational& v) {
      target.add_scaled(other.data_[k], v);
    });
  }
  return out;
}

RowVec Matrix::apply(const RowVec& x) const {
  if (x.dim() != cols_) throw std::invalid_argument("Matrix::apply shape mismatch");
  std::vector<std::pair<std::size_t, Rational>> entries;
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational acc;
    data_[i].for_each([&](std::size_t j, const Rational& v) {
      const Rational& xj = x.at(j);
      if (xj != 0) acc += v * xj;
    });
    if (acc != 0) entries.emplace_back(i, std::move(acc));
  }
  return RowVec::from_entries(rows_, std::move(entries));
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    data_[i].for_each([&](std::size_t j, const Rational& v) { out.set(j, i, v); });
  return out;
}

Matrix Matrix::scaled(const Rational& factor) const {
  Matrix out = *this;
  for (auto& r : out.data_) r.scale(factor);
  return out;
}

Matrix Matrix::plus(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("Matrix::plus shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < rows_; ++i) out.data_[i].add_scaled(other.data_[i], Rational(1));
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& r : data_)
    if (!r.is_zero()) return false;
  return true;
}

std::pair<Matrix, std::size_t> Matrix::rref() const {
  std::vector<RowVec> work = data_;
  std::vector<RowVec> done;
  done.reserve(rows_);
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < cols_ && done.size() < rows_; ++col) {
    std::size_t found = work.size();
    for (std::size_t i = 0; i < work.size(); ++i) {
      auto lead = work[i].leading();
      if (lead && *lead == col) {
        found = i;
        break;
      }
    }
    if (found == work.size()) continue;
    RowVec pivot = std::move(work[found]);
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(found));
    Rational inv = Rational(1) / pivot.at(col);
    pivot.scale(inv);
    for (auto& r : work) {
      const Rational& c = r.at(col);
      if (c != 0) r.add_scaled(pivot, -c);
    }
    for (std::size_t k = 0; k < done.size(); ++k) {
      const Rational& c = done[k].at(col);
      if (c != 0) done[k].add_scaled(pivot, -c);
    }
    done.push_back(std::move(pivot));
    pivots.push_back(col);
  }
  std::size_t rank = done.size();
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < rank; ++i) out.data_[i] = std::move(done[i]);
  return {std::move(out), rank};
}

Matrix Matrix::kernel() const {
  auto [red, rank] = rref();
  std::vector<bool> is_pivot(cols_, false);
  std::vector<std::size_t> pivot_col(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    pivot_col[i] = *red.row(i).leading();
    is_pivot[pivot_col[i]] = true;
  }
  std::vector<RowVec> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    RowVec v(cols_);
    v.set(free, Rational(1));
    for (std::size_t i = 0; i < rank; ++i) {
      const Rational& c = red.row(i).at(free);
      if (c != 0) v.set(pivot_col[i], -c);
    }
    basis.push_back(std::move(v));
  }
  return Matrix::from_rows(cols_, std::move(basis));
}

Rational Matrix::trace() const {
  Rational t;
  std::size_t n = rows_ < cols_ ? rows_ : cols_;
  for (std::size_t i = 0; i < n; ++i) t += at(i, i);
  return t;
}

bool Matrix::operator==(const Matrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::optional<RowVec> solve_linear(const Matrix& a, const RowVec& b) {
  if (b.dim() != a.rows()) throw std::invalid_argument("solve_linear shape mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    aug.row(i) = RowVec(a.cols() + 1);
    a.row(i).for_each([&](std::size_t j, const Rational& v) { aug.set(i, j, v); });
    const Rational& bi = b.at(i);
    if (bi != 0) aug.set(i, a.cols(), bi);
  }
  auto [red, rank] = aug.rref();
  RowVec x(a.cols());
  for (std::size_t i = 0; i < rank; ++i) {
    std::size_t pivot = *red.row(i).leading();
    if (pivot == a.cols()) return std::nullopt;  // 0 = 1 row
    x.set(pivot, red.row(i).at(a.cols()));
  }
  return x;
}

}  // namespace codimlab
