#include "codimlab/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace codimlab {

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.basis_.push_back(RowVec::unit(ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<RowVec>& generators) {
  RankAccumulator acc(ambient);
  for (const auto& g : generators) acc.insert(g);
  return acc.to_subspace();
}

Subspace Subspace::from_matrix(const Matrix& generators) {
  std::vector<RowVec> rows;
  rows.reserve(generators.rows());
  for (std::size_t i = 0; i < generators.rows(); ++i) rows.push_back(generators.row(i));
  return span(generators.cols(), rows);
}

RowVec Subspace::reduce(RowVec v) const {
  if (v.dim() != ambient_) throw std::invalid_argument("Subspace::reduce ambient mismatch");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational& c = v.at(pivots_[i]);
    if (c != 0) v.add_scaled(basis_[i], -c);
  }
  return v;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (const auto& row : other.basis_)
    if (!contains(row)) return false;
  return true;
}

std::optional<RowVec> Subspace::coordinates(const RowVec& v) const {
  if (v.dim() != ambient_) throw std::invalid_argument("Subspace::coordinates ambient mismatch");
  RowVec rem = v;
  RowVec coords(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational& c = rem.at(pivots_[i]);
    if (c != 0) {
      coords.set(i, c);
      rem.add_scaled(basis_[i], -c);
    }
  }
  if (!rem.is_zero()) return std::nullopt;
  return coords;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace::sum ambient mismatch");
  RankAccumulator acc(ambient_);
  for (const auto& r : basis_) acc.insert(r);
  for (const auto& r : other.basis_) acc.insert(r);
  return acc.to_subspace();
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    throw std::invalid_argument("Subspace::intersect ambient mismatch");
  // x in A∩B iff x = y^T A = z^T B: solve the stacked dual system
  // A^T y - B^T z = 0 and map kernel vectors back through A.
  const std::size_t a = dim();
  const std::size_t b = other.dim();
  if (a == 0 || b == 0) return Subspace::zero(ambient_);
  Matrix system(ambient_, a + b);
  for (std::size_t i = 0; i < a; ++i)
    basis_[i].for_each([&](std::size_t j, const Rational& v) { system.set(j, i, v); });
  for (std::size_t i = 0; i < b; ++i)
    other.basis_[i].for_each(
        [&](std::size_t j, const Rational& v) { system.set(j, a + i, -v); });
  Matrix null = system.kernel();
  std::vector<RowVec> gens;
  for (std::size_t k = 0; k < null.rows(); ++k) {
    RowVec x(ambient_);
    for (std::size_t i = 0; i < a; ++i) {
      const Rational& yi = null.row(k).at(i);
      if (yi != 0) x.add_scaled(basis_[i], yi);
    }
    if (!x.is_zero()) gens.push_back(std::move(x));
  }
  return span(ambient_, gens);
}

std::vector<std::size_t> Subspace::complement_coordinates() const {
  std::vector<std::size_t> out;
  std::size_t next = 0;
  for (std::size_t p : pivots_) {
    for (; next < p; ++next) out.push_back(next);
    next = p + 1;
  }
  for (; next < ambient_; ++next) out.push_back(next);
  return out;
}

bool Subspace::operator<(const Subspace& other) const {
  if (ambient_ != other.ambient_) return ambient_ < other.ambient_;
  if (basis_.size() != other.basis_.size()) return basis_.size() < other.basis_.size();
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    auto ea = basis_[i].entries();
    auto eb = other.basis_[i].entries();
    if (ea != eb) return ea < eb;
  }
  return false;
}

bool RankAccumulator::insert(RowVec v) {
  if (v.dim() != ambient_)
    throw std::invalid_argument("RankAccumulator::insert length mismatch");
  while (true) {
    auto lead = v.leading();
    if (!lead) return false;
    auto it = pivot_row_.find(*lead);
    if (it == pivot_row_.end()) {
      Rational inv = Rational(1) / v.at(*lead);
      v.scale(inv);
      pivot_row_[*lead] = rows_.size();
      rows_.push_back(std::move(v));
      return true;
    }
    v.add_scaled(rows_[it->second], -v.at(*lead));
  }
}

void RankAccumulator::merge(RankAccumulator&& other) {
  if (other.ambient_ != ambient_)
    throw std::invalid_argument("RankAccumulator::merge ambient mismatch");
  for (auto& r : other.rows_) insert(std::move(r));
  other.rows_.clear();
  other.pivot_row_.clear();
}

Subspace RankAccumulator::to_subspace() const {
  // Back-substitute to the unique reduced form, in pivot order.
  std::vector<std::pair<std::size_t, RowVec>> ordered;
  ordered.reserve(rows_.size());
  for (const auto& [pivot, idx] : pivot_row_) ordered.emplace_back(pivot, rows_[idx]);
  for (std::size_t i = ordered.size(); i-- > 0;) {
    for (std::size_t j = i + 1; j < ordered.size(); ++j) {
      const Rational& c = ordered[i].second.at(ordered[j].first);
      if (c != 0) ordered[i].second.add_scaled(ordered[j].second, -c);
    }
  }
  Subspace s(ambient_);
  for (auto& [pivot, row] : ordered) {
    s.pivots_.push_back(pivot);
    s.basis_.push_back(std::move(row));
  }
  return s;
}

}  // namespace codimlab
