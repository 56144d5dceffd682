#pragma once

#include "codimlab/rational.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace codimlab {

// Row vector over Q with sparse storage (sorted index/value pairs) and a dense
// fallback once fill-in exceeds 50% of the ambient dimension. Values are kept
// free of explicit zeros in sparse mode.
class RowVec {
 public:
  RowVec() : dim_(0) {}
  explicit RowVec(std::size_t dim) : dim_(dim) {}
  static RowVec unit(std::size_t dim, std::size_t pos);

  std::size_t dim() const { return dim_; }
  std::size_t nnz() const;
  bool is_zero() const;

  // Zero when absent; the reference is only valid until the next mutation.
  const Rational& at(std::size_t index) const;
  void set(std::size_t index, const Rational& value);

  // First index with a nonzero entry.
  std::optional<std::size_t> leading() const;

  void scale(const Rational& factor);
  void negate();
  // *this += factor * other.  Dimensions must agree.
  void add_scaled(const RowVec& other, const Rational& factor);

  void for_each(const std::function<void(std::size_t, const Rational&)>& fn) const;
  std::vector<std::pair<std::size_t, Rational>> entries() const;

  // Builds a row from unsorted (index, value) pairs, combining duplicates.
  static RowVec from_entries(std::size_t dim,
                             std::vector<std::pair<std::size_t, Rational>> entries);

  bool operator==(const RowVec& other) const;
  bool operator!=(const RowVec& other) const { return !(*this == other); }

 private:
  void maybe_densify();
  void densify();

  std::size_t dim_;
  bool dense_ = false;
  std::vector<std::pair<std::size_t, Rational>> sparse_;  // sorted by index
  std::vector<Rational> values_;                          // dense storage
};

}  // namespace codimlab
