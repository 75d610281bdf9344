#include "lattice_hardy/trig_poly.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "lattice_hardy/errors.hpp"

namespace lattice_hardy {
namespace {

double two_pi_pow(int d) { return std::pow(2.0 * std::numbers::pi, d); }

// sum_n conj(a_n) b_n in lexicographic order of a's support.
Complex contract(const SparseField<Complex>& a, const SparseField<Complex>& b) {
  Complex s = 0.0;
  for (const auto& [n, x] : a.sorted_entries()) {
    if (b.contains(n)) s += std::conj(x) * b.at(n);
  }
  return s;
}

}  // namespace

bool TrigPoly::is_hermitian(double tol) const {
  for (const auto& [n, c] : coeffs_.sorted_entries()) {
    if (std::abs(coeffs_.at(-n) - std::conj(c)) > tol) return false;
  }
  return true;
}

Complex TrigPoly::evaluate(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim()) throw ArgumentError("evaluation point has wrong dimension");
  Complex s = 0.0;
  for (const auto& [n, c] : coeffs_.sorted_entries()) {
    double phase = 0.0;
    for (int j = 0; j < dim(); ++j) phase += n[j] * x[static_cast<std::size_t>(j)];
    s += c * Complex(std::cos(phase), std::sin(phase));
  }
  return s;
}

double TrigPoly::l2_norm_sq() const {
  double s = 0.0;
  for (const auto& [n, c] : coeffs_.sorted_entries()) s += std::norm(c);
  return two_pi_pow(dim()) * s;
}

TrigPoly multiply_by_omega(const TrigPoly& psi) {
  const int d = psi.dim();
  TrigPoly out(d, psi.real_valued());
  auto& oc = out.coeffs();
  oc.reserve((2 * static_cast<std::size_t>(d) + 1) * psi.coeffs().size());
  for (const auto& [n, c] : psi.coeffs().sorted_entries()) {
    oc.add(n, 0.5 * d * c);
    for (int j = 0; j < d; ++j) {
      oc.add(n.shifted(j, 1), -0.25 * c);
      oc.add(n.shifted(j, -1), -0.25 * c);
    }
  }
  return out;
}

TrigPoly multiply_by_omega_power(const TrigPoly& psi, int p) {
  if (p < 0) throw ArgumentError("omega power must be non-negative in coefficient space");
  TrigPoly w = psi;
  for (int i = 0; i < p; ++i) w = multiply_by_omega(w);
  return w;
}

TrigPoly laplacian_multiplier(const TrigPoly& psi, int m) {
  if (m < 0) throw ArgumentError("Laplacian power must be non-negative");
  TrigPoly out(psi.dim(), psi.real_valued());
  psi.coeffs().for_each_unordered([&](const MultiIndex& n, Complex c) {
    const double s = -static_cast<double>(n.norm_sq());
    double f = 1.0;
    for (int i = 0; i < m; ++i) f *= s;
    out.coeffs().set(n, f * c);
  });
  return out;
}

TrigPoly partial_derivative(const TrigPoly& psi, int axis) {
  if (axis < 0 || axis >= psi.dim()) throw ArgumentError("axis out of range");
  TrigPoly out(psi.dim(), psi.real_valued());
  psi.coeffs().for_each_unordered([&](const MultiIndex& n, Complex c) {
    out.coeffs().set(n, Complex(0.0, n[axis]) * c);
  });
  return out;
}

std::vector<TrigPoly> gradient_components(const TrigPoly& psi) {
  std::vector<TrigPoly> out;
  out.reserve(static_cast<std::size_t>(psi.dim()));
  for (int j = 0; j < psi.dim(); ++j) out.push_back(partial_derivative(psi, j));
  return out;
}

std::vector<TrigPoly> apply_derivative(const TrigPoly& psi, Derivative op) {
  TrigPoly base = laplacian_multiplier(psi, op.laplacian_power);
  if (op.gradient) return gradient_components(base);
  return {std::move(base)};
}

double weighted_form(const TrigPoly& psi, Derivative op, int p) {
  if (p < 0) throw ArgumentError("weighted_form needs a non-negative omega power; use torus_integral");
  const int a = p / 2;
  const int b = p - a;
  double total = 0.0;
  for (const TrigPoly& phi : apply_derivative(psi, op)) {
    const TrigPoly left = multiply_by_omega_power(phi, a);
    const TrigPoly right = b == a ? left : multiply_by_omega_power(phi, b);
    total += contract(left.coeffs(), right.coeffs()).real();
  }
  return two_pi_pow(psi.dim()) * total;
}

std::vector<MultiIndex> linf_ball(int dim, int radius) {
  check_dimension(dim);
  if (radius < 0) throw ArgumentError("radius must be non-negative");
  std::vector<MultiIndex> out;
  MultiIndex n(dim);
  for (int j = 0; j < dim; ++j) n[j] = -radius;
  while (true) {
    out.push_back(n);
    int j = dim - 1;
    while (j >= 0 && n[j] == radius) {
      n[j] = -radius;
      --j;
    }
    if (j < 0) break;
    ++n[j];
  }
  return out;
}

TrigPoly random_trig_poly(int dim, int radius, std::uint64_t seed, bool zero_average,
                          bool real_valued) {
  if (radius < 1) throw ArgumentError("support radius must be at least 1");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);

  SparseField<Complex> raw(dim);
  const auto ball = linf_ball(dim, radius);
  raw.reserve(ball.size());
  for (const auto& n : ball) {
    const double re = uni(rng);
    const double im = uni(rng);
    raw.set(n, Complex(re, im));
  }
  TrigPoly out(dim, real_valued);
  for (const auto& n : ball) {
    if (zero_average && n.is_zero()) continue;
    Complex c = raw.at(n);
    if (real_valued) c = 0.5 * (c + std::conj(raw.at(-n)));
    out.set(n, c);
  }
  return out;
}

}  // namespace lattice_hardy
