#pragma once

#include <cstddef>
#include <cstdint>

#include "lattice_hardy/omega_kernel.hpp"
#include "lattice_hardy/trig_poly.hpp"

namespace lattice_hardy {

/// Tensor midpoint grid on Q_d: x_m = -pi + (2 pi / N)(m + 1/2) when shifted,
/// -pi + 2 pi m / N otherwise. Shifted grids never contain the origin.
struct QuadratureSpec {
  int nodes_per_axis = 64;
  bool shifted = true;
};

struct QuadratureResult {
  double value = 0.0;
  /// |Q_N - Q_{N/2}|.
  double diagnostic = 0.0;
  int nodes_per_axis = 0;
};

/// Default cap on N^d + (N/2)^d grid nodes per quadrature_form call.
inline constexpr std::uint64_t kDefaultNodeBudget = std::uint64_t{1} << 26;

/// Grid sum approximating int_{Q_d} sum_c |phi_c(x)|^2 omega(x)^power S(x) dx,
/// phi = op psi. For axis_sin2 the gradient component i is paired with
/// sin^2(x_i/2). Evaluated slab by slab (one axis summed at a time), in a
/// fixed lexicographic node order.
double grid_integral(const TrigPoly& psi, Derivative op, int power, WeightShape shape,
                     const QuadratureSpec& spec);

/// grid_integral at N together with the N/2 comparison. Requires N >= 8 and
/// even; throws ResourceError when the node count exceeds `node_budget`.
QuadratureResult quadrature_form(const TrigPoly& psi, Derivative op, int power, const QuadratureSpec& spec,
                                 WeightShape shape = WeightShape::plain,
                                 std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace lattice_hardy
