#include "lattice_hardy/multi_index.hpp"

#include <cstdlib>

#include "lattice_hardy/errors.hpp"

namespace lattice_hardy {

void check_dimension(int dim) {
  if (dim < 1 || dim > kMaxDim) {
    throw ArgumentError("dimension must be in [1, " + std::to_string(kMaxDim) + "], got " +
                        std::to_string(dim));
  }
}

MultiIndex::MultiIndex(int dim) : dim_(dim) { check_dimension(dim); }

MultiIndex::MultiIndex(std::initializer_list<int> coords)
    : MultiIndex(std::span<const int>(coords.begin(), coords.size())) {}

MultiIndex::MultiIndex(std::span<const int> coords) : dim_(static_cast<int>(coords.size())) {
  check_dimension(dim_);
  std::copy(coords.begin(), coords.end(), coords_.begin());
}

MultiIndex MultiIndex::unit(int dim, int axis, int sign) {
  MultiIndex n(dim);
  if (axis < 0 || axis >= dim) {
    throw ArgumentError("axis " + std::to_string(axis) + " out of range for dimension " +
                        std::to_string(dim));
  }
  n[axis] = sign;
  return n;
}

std::int64_t MultiIndex::norm_sq() const noexcept {
  std::int64_t s = 0;
  for (int c : coords()) s += static_cast<std::int64_t>(c) * c;
  return s;
}

int MultiIndex::linf() const noexcept {
  int r = 0;
  for (int c : coords()) r = std::max(r, std::abs(c));
  return r;
}

int MultiIndex::l1() const noexcept {
  int r = 0;
  for (int c : coords()) r += std::abs(c);
  return r;
}

bool MultiIndex::is_zero() const noexcept {
  return std::all_of(coords().begin(), coords().end(), [](int c) { return c == 0; });
}

MultiIndex MultiIndex::operator-() const noexcept {
  MultiIndex r = *this;
  for (int j = 0; j < dim_; ++j) r[j] = -r[j];
  return r;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const noexcept {
  MultiIndex r = *this;
  for (int j = 0; j < dim_; ++j) r[j] += o[j];
  return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const noexcept {
  MultiIndex r = *this;
  for (int j = 0; j < dim_; ++j) r[j] -= o[j];
  return r;
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (int j = 0; j < dim_; ++j) {
    if (j) s += ",";
    s += std::to_string(coords_[static_cast<std::size_t>(j)]);
  }
  return s + ")";
}

}  // namespace lattice_hardy
