#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lattice_hardy/constants.hpp"
#include "lattice_hardy/lattice.hpp"

namespace lattice_hardy {

/// Trial set S = {n : |n|_inf <= radius, n != 0}.
struct BoxSpec {
  int dim = 1;
  int radius = 1;

  /// (2R+1)^d, the number of box slots including the origin slot.
  std::size_t slots() const;
  /// |S| = (2R+1)^d - 1.
  std::size_t size() const { return slots() - 1; }
};

/// Dirichlet restriction of Delta^p to S, applied matrix-free: extend by zero,
/// apply the stencil p times, restrict. Vectors are indexed by box slots
/// (axis_order[0] varies fastest); the origin slot is always zero.
///
/// Step j of the power is evaluated only on the box of radius R + p - j,
/// which is exactly the region the final restriction depends on.
/// An instance keeps scratch buffers, so one instance serves one thread.
class BoxOperator {
 public:
  BoxOperator(BoxSpec box, int power, std::vector<int> axis_order = {});

  const BoxSpec& box() const noexcept { return box_; }
  int power() const noexcept { return power_; }
  std::size_t slots() const noexcept { return slots_; }
  std::size_t origin_slot() const noexcept { return origin_; }

  MultiIndex site(std::size_t slot) const;
  /// Slot of a site inside the box; throws ArgumentError otherwise.
  std::size_t slot(const MultiIndex& n) const;

  void apply(std::span<const double> u, std::span<double> out) const;

  /// Zero extension of a slot vector to a lattice function.
  LatticeFunction extend(std::span<const double> u) const;
  /// Slot vector of a lattice function supported in S.
  std::vector<double> restrict_to_box(const LatticeFunction& u) const;

 private:
  void stencil(const std::vector<double>& in, std::vector<double>& out, int radius) const;

  BoxSpec box_;
  int power_;
  std::vector<int> axis_order_;
  std::size_t slots_ = 0;
  std::size_t origin_ = 0;
  std::vector<std::size_t> box_stride_;  // per lattice axis
  int pad_side_ = 0;
  std::vector<std::ptrdiff_t> pad_stride_;  // per lattice axis
  std::ptrdiff_t pad_center_ = 0;
  std::vector<std::size_t> pad_offset_;  // slot -> padded index
  mutable std::vector<double> input_, work_a_, work_b_;
};

/// Delta^{2k+1} (hardy) or Delta^{2k} (rellich) restricted to S, applied to u.
LatticeFunction quadratic_form_apply(const LatticeFunction& u, const BoxSpec& box, int k, InequalityKind kind);

}  // namespace lattice_hardy
