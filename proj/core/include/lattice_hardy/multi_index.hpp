#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

namespace lattice_hardy {

/// Largest lattice / torus dimension supported by MultiIndex.
inline constexpr int kMaxDim = 12;

/// A point of Z^d, used both for lattice sites and Fourier frequencies.
///
/// Coordinates live inline (no allocation); ordering is lexicographic in the
/// coordinates, which is the canonical iteration order everywhere.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(int dim);
  MultiIndex(std::initializer_list<int> coords);
  explicit MultiIndex(std::span<const int> coords);

  static MultiIndex unit(int dim, int axis, int sign = 1);

  int dim() const noexcept { return dim_; }
  int operator[](int axis) const noexcept { return coords_[static_cast<std::size_t>(axis)]; }
  int& operator[](int axis) noexcept { return coords_[static_cast<std::size_t>(axis)]; }
  std::span<const int> coords() const noexcept {
    return {coords_.data(), static_cast<std::size_t>(dim_)};
  }

  /// |n|^2 in exact integer arithmetic.
  std::int64_t norm_sq() const noexcept;
  int linf() const noexcept;
  int l1() const noexcept;
  bool is_zero() const noexcept;

  MultiIndex shifted(int axis, int delta) const noexcept {
    MultiIndex r = *this;
    r.coords_[static_cast<std::size_t>(axis)] += delta;
    return r;
  }

  MultiIndex operator-() const noexcept;
  MultiIndex operator+(const MultiIndex& o) const noexcept;
  MultiIndex operator-(const MultiIndex& o) const noexcept;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) noexcept {
    return a.dim_ == b.dim_ && std::equal(a.coords_.begin(), a.coords_.begin() + a.dim_,
                                          b.coords_.begin());
  }
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) noexcept {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    for (int j = 0; j < a.dim_; ++j) {
      if (auto c = a[j] <=> b[j]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  std::string to_string() const;

 private:
  std::array<int, kMaxDim> coords_{};
  int dim_ = 0;
};

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& n) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(n.dim());
    for (int c : n.coords()) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(c)) + 0x9e3779b97f4a7c15ULL +
           (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

/// Throws ArgumentError unless 1 <= dim <= kMaxDim.
void check_dimension(int dim);

}  // namespace lattice_hardy
