#include "lattice_hardy/torus_integrals.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "lattice_hardy/errors.hpp"

namespace lattice_hardy {

std::string_view to_string(IntegralMethod method) {
  return method == IntegralMethod::kernel ? "kernel" : "grid";
}

IntegralMethod parse_integral_method(std::string_view text) {
  if (text == "kernel") return IntegralMethod::kernel;
  if (text == "grid") return IntegralMethod::grid;
  throw ArgumentError("unknown integration method '" + std::string(text) + "' (expected kernel|grid)");
}

int default_grid_nodes(int dim) { return dim <= 4 ? 64 : 16; }

double kernel_integral(const TrigPoly& psi, Derivative op, int power, WeightShape shape) {
  if (shape == WeightShape::axis_sin2 && !op.gradient) {
    throw ArgumentError("axis_sin2 weights pair with gradient components only");
  }
  const int d = psi.dim();
  if (psi.empty()) return 0.0;
  const TrigPoly a = laplacian_multiplier(psi, op.laplacian_power);
  const auto entries = a.coeffs().sorted_entries();
  const int r = a.coeffs().linf_radius();
  const auto table = cached_weight_table(d, power, shape, 2 * r);

  const std::size_t count = entries.size();
  std::vector<double> re(count), im(count);
  std::vector<std::ptrdiff_t> lin(count);
  std::vector<double> coord(op.gradient ? count * static_cast<std::size_t>(d) : 0);
  for (std::size_t i = 0; i < count; ++i) {
    const auto& [n, c] = entries[i];
    re[i] = c.real();
    im[i] = c.imag();
    std::ptrdiff_t l = 0;
    for (int j = 0; j < d; ++j) {
      l += n[j] * table->stride(j);
      if (op.gradient) coord[i * static_cast<std::size_t>(d) + static_cast<std::size_t>(j)] = n[j];
    }
    lin[i] = l;
  }

  const std::ptrdiff_t center = table->center();
  std::vector<const double*> tabs;
  const int ntab = shape == WeightShape::axis_sin2 ? d : 1;
  for (int t = 0; t < ntab; ++t) tabs.push_back(table->data(t) + center);

  // sum_{m,n} Re(conj a_m a_n) w(m,n) T(m-n); T is even so each unordered
  // pair is visited once and doubled.
  double total = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double* ci = op.gradient ? &coord[i * static_cast<std::size_t>(d)] : nullptr;
    double row = 0.0;
    for (std::size_t j = 0; j <= i; ++j) {
      const double re_prod = re[i] * re[j] + im[i] * im[j];
      const std::ptrdiff_t off = lin[i] - lin[j];
      double w;
      if (!op.gradient) {
        w = tabs[0][off];
      } else {
        const double* cj = &coord[j * static_cast<std::size_t>(d)];
        w = 0.0;
        if (shape == WeightShape::axis_sin2) {
          for (int t = 0; t < d; ++t) w += ci[t] * cj[t] * tabs[static_cast<std::size_t>(t)][off];
        } else {
          for (int t = 0; t < d; ++t) w += ci[t] * cj[t];
          w *= tabs[0][off];
        }
      }
      row += (j == i ? 1.0 : 2.0) * re_prod * w;
    }
    total += row;
  }
  return std::pow(2.0 * std::numbers::pi, d) * total;
}

IntegralValue torus_integral(const TrigPoly& psi, Derivative op, int power, WeightShape shape,
                             const IntegralOptions& options) {
  if (!weight_integrable(psi.dim(), power, shape)) {
    throw DomainError("integral with weight omega^" + std::to_string(power) + " diverges in dimension " +
                      std::to_string(psi.dim()));
  }
  IntegralValue v;
  if (power >= 0) {
    v.exact = true;
    v.value = shape == WeightShape::plain ? weighted_form(psi, op, power) : kernel_integral(psi, op, power, shape);
    return v;
  }
  if (options.method == IntegralMethod::kernel) {
    v.value = kernel_integral(psi, op, power, shape);
    return v;
  }
  QuadratureSpec spec;
  spec.nodes_per_axis = options.grid_nodes > 0 ? options.grid_nodes : default_grid_nodes(psi.dim());
  const auto q = quadrature_form(psi, op, power, spec, shape, options.node_budget);
  v.value = q.value;
  v.diagnostic = q.diagnostic;
  return v;
}

}  // namespace lattice_hardy
