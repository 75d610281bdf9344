#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lattice_hardy/errors.hpp"
#include "lattice_hardy/multi_index.hpp"

namespace lattice_hardy {

/// Finitely supported map Z^d -> T with implicit zeros.
///
/// Storage is hashed; every reduction goes through sorted_entries() so sums
/// are taken in lexicographic order and are reproducible bit for bit.
/// Exact zeros are pruned, nothing else is.
template <class T>
class SparseField {
 public:
  using Entry = std::pair<MultiIndex, T>;

  SparseField() = default;
  explicit SparseField(int dim) : dim_(dim) { check_dimension(dim); }

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  void reserve(std::size_t n) { values_.reserve(n); }

  T at(const MultiIndex& n) const {
    check(n);
    auto it = values_.find(n);
    return it == values_.end() ? T{} : it->second;
  }

  bool contains(const MultiIndex& n) const { return values_.find(n) != values_.end(); }

  void set(const MultiIndex& n, T value) {
    check(n);
    if (value == T{}) {
      values_.erase(n);
    } else {
      values_[n] = value;
    }
  }

  void add(const MultiIndex& n, T value) {
    check(n);
    if (value == T{}) return;
    auto [it, inserted] = values_.try_emplace(n, value);
    if (!inserted) {
      it->second += value;
      if (it->second == T{}) values_.erase(it);
    }
  }

  /// Entries in lexicographic order of the index.
  std::vector<Entry> sorted_entries() const {
    std::vector<Entry> out(values_.begin(), values_.end());
    std::sort(out.begin(), out.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    return out;
  }

  /// Visits entries in unspecified order; only for order-insensitive work.
  template <class F>
  void for_each_unordered(F&& f) const {
    for (const auto& [n, v] : values_) f(n, v);
  }

  int linf_radius() const noexcept {
    int r = 0;
    for (const auto& [n, v] : values_) r = std::max(r, n.linf());
    return r;
  }

  friend bool operator==(const SparseField& a, const SparseField& b) {
    return a.dim_ == b.dim_ && a.values_ == b.values_;
  }

 private:
  void check(const MultiIndex& n) const {
    if (n.dim() != dim_) {
      throw ArgumentError("index " + n.to_string() + " has dimension " +
                          std::to_string(n.dim()) + ", field has dimension " +
                          std::to_string(dim_));
    }
  }

  int dim_ = 0;
  std::unordered_map<MultiIndex, T, MultiIndexHash> values_;
};

}  // namespace lattice_hardy
