#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "lattice_hardy/multi_index.hpp"
#include "lattice_hardy/sparse_field.hpp"

namespace lattice_hardy {

using Complex = std::complex<double>;

/// Trigonometric polynomial psi(x) = sum_n c_n e^{i n.x} on Q_d = (-pi, pi)^d.
class TrigPoly {
 public:
  TrigPoly() = default;
  explicit TrigPoly(int dim, bool real_valued = false) : coeffs_(dim), real_valued_(real_valued) {}
  TrigPoly(SparseField<Complex> coeffs, bool real_valued)
      : coeffs_(std::move(coeffs)), real_valued_(real_valued) {}

  int dim() const noexcept { return coeffs_.dim(); }
  const SparseField<Complex>& coeffs() const noexcept { return coeffs_; }
  SparseField<Complex>& coeffs() noexcept { return coeffs_; }

  /// Whether Hermitian symmetry c_{-n} = conj(c_n) is maintained by the
  /// producer of this polynomial.
  bool real_valued() const noexcept { return real_valued_; }
  void set_real_valued(bool flag) noexcept { real_valued_ = flag; }

  Complex coefficient(const MultiIndex& n) const { return coeffs_.at(n); }
  void set(const MultiIndex& n, Complex c) { coeffs_.set(n, c); }

  bool empty() const noexcept { return coeffs_.empty(); }
  bool has_zero_average() const { return !coeffs_.contains(MultiIndex(dim())); }
  bool is_hermitian(double tol = 0.0) const;

  Complex evaluate(std::span<const double> x) const;

  /// (2 pi)^d sum |c_n|^2 = int_{Q_d} |psi|^2.
  double l2_norm_sq() const;

 private:
  SparseField<Complex> coeffs_;
  bool real_valued_ = false;
};

/// Coefficients of omega * psi, omega(x) = sum_j sin^2(x_j/2) = d/2 - (1/2) sum_j cos x_j:
/// (omega psi)_n = (d/2) c_n - (1/4) sum_j (c_{n-e_j} + c_{n+e_j}).
TrigPoly multiply_by_omega(const TrigPoly& psi);
TrigPoly multiply_by_omega_power(const TrigPoly& psi, int p);

/// Delta^m psi: coefficients (-|n|^2)^m c_n.
TrigPoly laplacian_multiplier(const TrigPoly& psi, int m);

/// d_{x_j} psi: coefficients i n_j c_n.
TrigPoly partial_derivative(const TrigPoly& psi, int axis);
std::vector<TrigPoly> gradient_components(const TrigPoly& psi);

/// Differential operator applied to psi before squaring: Delta^m, optionally
/// followed by the gradient.
struct Derivative {
  bool gradient = false;
  int laplacian_power = 0;

  static Derivative none() { return {false, 0}; }
  static Derivative grad() { return {true, 0}; }
  static Derivative laplacian(int m) { return {false, m}; }
  static Derivative grad_laplacian(int m) { return {true, m}; }
};

/// The components of the derivative (one for scalar operators, d for the gradient).
std::vector<TrigPoly> apply_derivative(const TrigPoly& psi, Derivative op);

/// int_{Q_d} |(op psi)(x)|^2 omega(x)^p dx for p >= 0, computed exactly in
/// coefficient space: omega^a phi and omega^b phi with a + b = p are
/// contracted by Parseval.
double weighted_form(const TrigPoly& psi, Derivative op, int p);

/// Uniform [-1,1] + i[-1,1] coefficients on the l-infinity ball of `radius`.
/// Real-valued polynomials are Hermitian-symmetrised ((c_n + conj c_{-n})/2),
/// zero-average ones lose their constant term. Deterministic in `seed`.
TrigPoly random_trig_poly(int dim, int radius, std::uint64_t seed, bool zero_average,
                          bool real_valued);

/// All points of the l-infinity ball {n : |n_j| <= radius}, lexicographic.
std::vector<MultiIndex> linf_ball(int dim, int radius);

}  // namespace lattice_hardy
