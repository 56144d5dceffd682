#include "codimlab/rowvec.hpp"

#include <algorithm>
#include <stdexcept>

namespace codimlab {

namespace {
const Rational kZero{};
}

RowVec RowVec::unit(std::size_t dim, std::size_t pos) {
  RowVec v(dim);
  v.set(pos, Rational(1));
  return v;
}

std::size_t RowVec::nnz() const {
  if (!dense_) return sparse_.size();
  std::size_t count = 0;
  for (const auto& v : values_)
    if (v != 0) ++count;
  return count;
}

bool RowVec::is_zero() const {
  if (!dense_) return sparse_.empty();
  for (const auto& v : values_)
    if (v != 0) return false;
  return true;
}

const Rational& RowVec::at(std::size_t index) const {
  if (dense_) return values_[index];
  auto it = std::lower_bound(sparse_.begin(), sparse_.end(), index,
                             [](const auto& e, std::size_t i) { return e.first < i; });
  if (it != sparse_.end() && it->first == index) return it->second;
  return kZero;
}

void RowVec::set(std::size_t index, const Rational& value) {
  if (index >= dim_) throw std::out_of_range("RowVec::set index out of range");
  if (dense_) {
    values_[index] = value;
    return;
  }
  auto it = std::lower_bound(sparse_.begin(), sparse_.end(), index,
                             [](const auto& e, std::size_t i) { return e.first < i; });
  if (it != sparse_.end() && it->first == index) {
    if (value == 0)
      sparse_.erase(it);
    else
      it->second = value;
  } else if (value != 0) {
    sparse_.insert(it, {index, value});
    maybe_densify();
  }
}

std::optional<std::size_t> RowVec::leading() const {
  if (!dense_) {
    if (sparse_.empty()) return std::nullopt;
    return sparse_.front().first;
  }
  for (std::size_t i = 0; i < dim_; ++i)
    if (values_[i] != 0) return i;
  return std::nullopt;
}

void RowVec::scale(const Rational& factor) {
  if (factor == 0) {
    sparse_.clear();
    if (dense_) values_.assign(dim_, Rational());
    return;
  }
  if (dense_) {
    for (auto& v : values_)
      if (v != 0) v *= factor;
  } else {
    for (auto& e : sparse_) e.second *= factor;
  }
}

void RowVec::negate() {
  if (dense_) {
    for (auto& v : values_)
      if (v != 0) v = -v;
  } else {
    for (auto& e : sparse_) e.second = -e.second;
  }
}

void RowVec::add_scaled(const RowVec& other, const Rational& factor) {
  if (other.dim_ != dim_) throw std::invalid_argument("RowVec::add_scaled dimension mismatch");
  if (factor == 0 || other.is_zero()) return;
  if (dense_) {
    other.for_each([&](std::size_t i, const Rational& v) { values_[i] += factor * v; });
    return;
  }
  if (other.dense_) {
    densify();
    other.for_each([&](std::size_t i, const Rational& v) { values_[i] += factor * v; });
    return;
  }
  std::vector<std::pair<std::size_t, Rational>> merged;
  merged.reserve(sparse_.size() + other.sparse_.size());
  auto a = sparse_.begin();
  auto b = other.sparse_.begin();
  while (a != sparse_.end() || b != other.sparse_.end()) {
    if (b == other.sparse_.end() || (a != sparse_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a));
      ++a;
    } else if (a == sparse_.end() || b->first < a->first) {
      merged.emplace_back(b->first, factor * b->second);
      ++b;
    } else {
      Rational v = a->second + factor * b->second;
      if (v != 0) merged.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  sparse_ = std::move(merged);
  maybe_densify();
}

void RowVec::for_each(const std::function<void(std::size_t, const Rational&)>& fn) const {
  if (dense_) {
    for (std::size_t i = 0; i < dim_; ++i)
      if (values_[i] != 0) fn(i, values_[i]);
  } else {
    for (const auto& e : sparse_) fn(e.first, e.second);
  }
}

std::vector<std::pair<std::size_t, Rational>> RowVec::entries() const {
  std::vector<std::pair<std::size_t, Rational>> out;
  out.reserve(nnz());
  for_each([&](std::size_t i, const Rational& v) { out.emplace_back(i, v); });
  return out;
}

RowVec RowVec::from_entries(std::size_t dim,
                            std::vector<std::pair<std::size_t, Rational>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  RowVec v(dim);
  for (auto& e : entries) {
    if (e.first >= dim) throw std::out_of_range("RowVec::from_entries index out of range");
    if (!v.sparse_.empty() && v.sparse_.back().first == e.first)
      v.sparse_.back().second += e.second;
    else
      v.sparse_.emplace_back(e.first, std::move(e.second));
  }
  std::erase_if(v.sparse_, [](const auto& e) { return e.second == 0; });
  v.maybe_densify();
  return v;
}

bool RowVec::operator==(const RowVec& other) const {
  if (dim_ != other.dim_) return false;
  if (!dense_ && !other.dense_) return sparse_ == other.sparse_;
  for (std::size_t i = 0; i < dim_; ++i)
    if (at(i) != other.at(i)) return false;
  return true;
}

void RowVec::maybe_densify() {
  if (!dense_ && dim_ >= 8 && sparse_.size() * 2 > dim_) densify();
}

void RowVec::densify() {
  if (dense_) return;
  values_.assign(dim_, Rational());
  for (auto& e : sparse_) values_[e.first] = std::move(e.second);
  sparse_.clear();
  sparse_.shrink_to_fit();
  dense_ = true;
}

}  // namespace codimlab
