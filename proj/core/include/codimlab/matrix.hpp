#pragma once

#include "codimlab/rowvec.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace codimlab {

class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, std::vector<RowVec> rows);
  // Row-major literal, for tests and fixtures.
  static Matrix from_literal(std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const RowVec& row(std::size_t i) const { return data_[i]; }
  RowVec& row(std::size_t i) { return data_[i]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i].at(j); }
  void set(std::size_t i, std::size_t j, const Rational& v) { data_[i].set(j, v); }

  Matrix multiply(const Matrix& other) const;
  // y = M * x, with x interpreted as a column vector of length cols().
  RowVec apply(const RowVec& x) const;
  Matrix transpose() const;
  Matrix scaled(const Rational& factor) const;
  Matrix plus(const Matrix& other) const;
  bool is_zero() const;

  // Unique reduced row echelon form and its rank.
  std::pair<Matrix, std::size_t> rref() const;
  std::size_t rank() const { return rref().second; }
  // Rows span the null space {x : M x = 0}; canonical (RREF) basis.
  Matrix kernel() const;
  Rational trace() const;

  bool operator==(const Matrix& other) const;
  bool operator!=(const Matrix& other) const { return !(*this == other); }

 private:
  std::size_t rows_, cols_;
  std::vector<RowVec> data_;
};

// Canonical particular solution of A x = b (free variables zero), or nullopt
// when the system is inconsistent.
std::optional<RowVec> solve_linear(const Matrix& a, const RowVec& b);

}  // namespace codimlab
