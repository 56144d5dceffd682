#pragma once

#include "codimlab/matrix.hpp"

#include <map>
#include <optional>
#include <vector>

namespace codimlab {

// Subspace of Q^ambient in its unique canonical form: an RREF row basis with
// strictly increasing pivots, pivot entries 1, zeros above and below.  This is
// the universal currency for ideals, radicals and submodules, and makes
// subspace equality plain basis equality.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
  static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, const std::vector<RowVec>& generators);
  static Subspace from_matrix(const Matrix& generators);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<RowVec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Matrix basis_matrix() const { return Matrix::from_rows(ambient_, basis_); }

  // v reduced modulo the subspace (eliminate at every pivot).
  RowVec reduce(RowVec v) const;
  bool contains(const RowVec& v) const { return reduce(v).is_zero(); }
  bool contains(const Subspace& other) const;
  // Coordinates of v in the row basis, if v lies in the subspace.
  std::optional<RowVec> coordinates(const RowVec& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  // Canonical complement: the non-pivot coordinate indices in increasing order.
  std::vector<std::size_t> complement_coordinates() const;

  bool operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && basis_ == other.basis_;
  }
  bool operator!=(const Subspace& other) const { return !(*this == other); }
  // Total order for use as a map key (memoized subspace trajectories).
  bool operator<(const Subspace& other) const;

 private:
  std::size_t ambient_;
  std::vector<RowVec> basis_;
  std::vector<std::size_t> pivots_;
  friend class RankAccumulator;
};

// Streaming rank of a vector stream: state is an echelon basis, so memory is
// O(rank x ambient) no matter how many vectors are inserted.  Supports
// partitioned accumulation: build accumulators over disjoint batches and merge;
// the final canonical form is independent of insertion order and partition.
class RankAccumulator {
 public:
  explicit RankAccumulator(std::size_t ambient) : ambient_(ambient) {}

  // Returns true when the vector enlarged the span.
  bool insert(RowVec v);
  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  void merge(RankAccumulator&& other);
  // Canonical RREF subspace of everything inserted so far.
  Subspace to_subspace() const;

 private:
  std::size_t ambient_;
  std::vector<RowVec> rows_;                     // echelon rows, pivot entry 1
  std::map<std::size_t, std::size_t> pivot_row_; // pivot column -> row index
};

}  // namespace codimlab
