#pragma once

#include <cstdint>
#include <string_view>

#include "lattice_hardy/omega_kernel.hpp"
#include "lattice_hardy/quadrature.hpp"
#include "lattice_hardy/trig_poly.hpp"

namespace lattice_hardy {

/// How integrals with a negative power of omega are evaluated.
///   kernel  exact contraction with the heat-kernel Fourier coefficients of
///           the weight (spectrally accurate, any dimension)
///   grid    shifted midpoint tensor grid with an N vs N/2 diagnostic
enum class IntegralMethod { kernel, grid };

std::string_view to_string(IntegralMethod method);
IntegralMethod parse_integral_method(std::string_view text);

struct IntegralOptions {
  IntegralMethod method = IntegralMethod::kernel;
  int grid_nodes = 0;  ///< 0 picks default_grid_nodes(d)
  std::uint64_t node_budget = kDefaultNodeBudget;
};

/// 64 nodes per axis up to d = 4, 16 above.
int default_grid_nodes(int dim);

struct IntegralValue {
  double value = 0.0;
  double diagnostic = 0.0;  ///< grid only
  bool exact = false;       ///< finite sums only, no approximation
};

/// int_{Q_d} sum_c |(op psi)_c|^2 omega^power S dx by contraction of the
/// coefficients with a WeightTable. Exact for power >= 0.
double kernel_integral(const TrigPoly& psi, Derivative op, int power, WeightShape shape);

/// Dispatch: non-negative powers are always evaluated exactly; negative ones
/// through `options.method`. Throws DomainError for non-integrable weights.
IntegralValue torus_integral(const TrigPoly& psi, Derivative op, int power, WeightShape shape,
                             const IntegralOptions& options);

}  // namespace lattice_hardy
