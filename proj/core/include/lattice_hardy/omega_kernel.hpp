#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace lattice_hardy {

/// Extra factor multiplying omega^power in a torus weight.
///   plain      1
///   sin4_sum   sum_i sin^4(x_i/2)
///   axis_sin2  sin^2(x_i/2), one table per axis i (paired with d_{x_i} psi)
enum class WeightShape { plain, sin4_sum, axis_sin2 };

/// Fourier coefficients W_k of a weight W(x) = omega(x)^power * S(x), so that
///   int_{Q_d} conj(e^{i m.x}) e^{i n.x} W(x) dx = (2 pi)^d W_{m-n},
/// tabulated densely on the difference box |k_j| <= max_shift.
///
/// Non-negative powers are exact (finite stencil products). Negative powers
/// use omega^{-p} = Gamma(p)^{-1} int_0^inf t^{p-1} e^{-t omega} dt with the
/// separable heat kernel e^{-t sin^2(x/2)} = sum_k e^{-t/2} I_k(t/2) e^{ikx},
/// integrated by the trapezoid rule in log t.
class WeightTable {
 public:
  WeightTable(int dim, int power, WeightShape shape, int max_shift);

  int dim() const noexcept { return dim_; }
  int power() const noexcept { return power_; }
  WeightShape shape() const noexcept { return shape_; }
  int max_shift() const noexcept { return max_shift_; }

  /// Stride of axis j in the dense table: (2 max_shift + 1)^j.
  std::ptrdiff_t stride(int axis) const noexcept { return strides_[static_cast<std::size_t>(axis)]; }
  /// Dense index of the zero difference.
  std::ptrdiff_t center() const noexcept { return center_; }

  /// Dense data; `axis` selects the table for axis_sin2 and is ignored otherwise.
  const double* data(int axis = 0) const noexcept;

  double at(std::span<const int> k, int axis = 0) const;

 private:
  int dim_;
  int power_;
  WeightShape shape_;
  int max_shift_;
  std::vector<std::ptrdiff_t> strides_;
  std::ptrdiff_t center_ = 0;
  std::size_t table_size_ = 0;
  std::vector<double> values_;  // one or dim_ tables back to back
};

/// Exponent q of the extra sin^{2q} factor carried by a shape (0, 2, 1).
int shape_order(WeightShape shape);

/// Whether int |psi|^2 omega^power S converges for a generic smooth psi:
/// d/2 + q + power > 0.
bool weight_integrable(int dim, int power, WeightShape shape);

/// Shared, lazily built table; identical requests reuse one instance.
std::shared_ptr<const WeightTable> cached_weight_table(int dim, int power, WeightShape shape,
                                                       int max_shift);

/// e^{-x} I_k(x), k = 0..kmax, switching to the large-x asymptotic series
/// where the direct evaluation would lose accuracy.
void scaled_bessel_values(double x, int kmax, std::span<double> out);

}  // namespace lattice_hardy
