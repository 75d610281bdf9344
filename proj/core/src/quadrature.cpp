#include "lattice_hardy/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "lattice_hardy/errors.hpp"

namespace lattice_hardy {
namespace {

class GridEvaluator {
 public:
  GridEvaluator(const TrigPoly& psi, Derivative op, int power, WeightShape shape, const QuadratureSpec& spec)
      : d_(psi.dim()), n_(spec.nodes_per_axis), power_(power), shape_(shape) {
    const auto fields = apply_derivative(psi, op);
    if (shape == WeightShape::axis_sin2 && !op.gradient) {
      throw ArgumentError("axis_sin2 weights pair with gradient components only");
    }
    r_ = psi.coeffs().linf_radius();
    side_ = 2 * r_ + 1;
    nf_ = fields.size();

    std::size_t full = 1;
    for (int j = 0; j < d_; ++j) full *= static_cast<std::size_t>(side_);
    levels_.resize(static_cast<std::size_t>(d_) + 1);
    std::size_t sz = full;
    for (int j = 0; j <= d_; ++j) {
      levels_[static_cast<std::size_t>(j)].assign(nf_ * sz, Complex{});
      sz /= static_cast<std::size_t>(side_);
    }
    auto& top = levels_[0];
    for (std::size_t f = 0; f < nf_; ++f) {
      for (const auto& [n, c] : fields[f].coeffs().sorted_entries()) {
        std::size_t idx = 0, stride = 1;
        for (int j = 0; j < d_; ++j) {
          idx += static_cast<std::size_t>(n[j] + r_) * stride;
          stride *= static_cast<std::size_t>(side_);
        }
        top[f * full + idx] = c;
      }
    }

    const double h = 2.0 * std::numbers::pi / n_;
    const double offset = spec.shifted ? 0.5 : 0.0;
    phase_.resize(static_cast<std::size_t>(n_) * static_cast<std::size_t>(side_));
    sin2_.resize(static_cast<std::size_t>(n_));
    for (int m = 0; m < n_; ++m) {
      const double x = -std::numbers::pi + h * (m + offset);
      const double s = std::sin(0.5 * x);
      sin2_[static_cast<std::size_t>(m)] = s * s;
      for (int a = -r_; a <= r_; ++a) {
        phase_[static_cast<std::size_t>(m * side_ + a + r_)] = Complex(std::cos(a * x), std::sin(a * x));
      }
    }
    cell_ = std::pow(h, d_);
    node_sin2_.assign(static_cast<std::size_t>(d_), 0.0);
  }

  double run() { return cell_ * recurse(0, 0.0, 0.0); }

 private:
  double recurse(int level, double omega, double sin4) {
    if (level == d_) return leaf(omega, sin4);
    const std::size_t rem = levels_[static_cast<std::size_t>(level + 1)].size() / nf_;
    const std::size_t in_block = rem * static_cast<std::size_t>(side_);
    const auto& in = levels_[static_cast<std::size_t>(level)];
    auto& out = levels_[static_cast<std::size_t>(level + 1)];
    double total = 0.0;
    for (int m = 0; m < n_; ++m) {
      const Complex* ph = &phase_[static_cast<std::size_t>(m * side_)];
      for (std::size_t f = 0; f < nf_; ++f) {
        const Complex* src = &in[f * in_block];
        Complex* dst = &out[f * rem];
        for (std::size_t q = 0; q < rem; ++q) {
          Complex acc{};
          const Complex* row = src + q * static_cast<std::size_t>(side_);
          for (int a = 0; a < side_; ++a) acc += row[a] * ph[a];
          dst[q] = acc;
        }
      }
      const double s2 = sin2_[static_cast<std::size_t>(m)];
      node_sin2_[static_cast<std::size_t>(level)] = s2;
      total += recurse(level + 1, omega + s2, sin4 + s2 * s2);
    }
    return total;
  }

  double leaf(double omega, double sin4) const {
    const auto& v = levels_[static_cast<std::size_t>(d_)];
    double w = 1.0;
    for (int i = 0; i < std::abs(power_); ++i) w *= omega;
    if (power_ < 0) w = 1.0 / w;
    if (shape_ == WeightShape::axis_sin2) {
      double s = 0.0;
      for (std::size_t f = 0; f < nf_; ++f) s += std::norm(v[f]) * node_sin2_[f];
      return w * s;
    }
    double s = 0.0;
    for (std::size_t f = 0; f < nf_; ++f) s += std::norm(v[f]);
    return shape_ == WeightShape::sin4_sum ? w * sin4 * s : w * s;
  }

  int d_;
  int n_;
  int power_;
  WeightShape shape_;
  int r_ = 0;
  int side_ = 1;
  std::size_t nf_ = 0;
  double cell_ = 0.0;
  std::vector<std::vector<Complex>> levels_;
  std::vector<Complex> phase_;
  std::vector<double> sin2_;
  std::vector<double> node_sin2_;
};

}  // namespace

double grid_integral(const TrigPoly& psi, Derivative op, int power, WeightShape shape,
                     const QuadratureSpec& spec) {
  if (spec.nodes_per_axis < 1) throw ArgumentError("grid needs at least one node per axis");
  if (!spec.shifted && power < 0) {
    throw ArgumentError("unshifted grids contain the origin; negative omega powers need a shifted grid");
  }
  if (psi.empty()) return 0.0;
  GridEvaluator eval(psi, op, power, shape, spec);
  return eval.run();
}

QuadratureResult quadrature_form(const TrigPoly& psi, Derivative op, int power, const QuadratureSpec& spec,
                                 WeightShape shape, std::uint64_t node_budget) {
  const int n = spec.nodes_per_axis;
  if (n < 8 || n % 2 != 0) throw ArgumentError("quadrature needs an even node count N >= 8 (got " + std::to_string(n) + ")");
  const double nodes = std::pow(static_cast<double>(n), psi.dim()) + std::pow(0.5 * n, psi.dim());
  if (nodes > static_cast<double>(node_budget)) {
    throw ResourceError("grid of " + std::to_string(n) + "^" + std::to_string(psi.dim()) +
                        " nodes exceeds the node budget of " + std::to_string(node_budget));
  }
  QuadratureResult r;
  r.nodes_per_axis = n;
  r.value = grid_integral(psi, op, power, shape, spec);
  const double coarse = grid_integral(psi, op, power, shape, {n / 2, spec.shifted});
  r.diagnostic = std::abs(r.value - coarse);
  return r;
}

}  // namespace lattice_hardy
