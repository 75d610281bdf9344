#include "lattice_hardy/correspondence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lattice_hardy/errors.hpp"

namespace lattice_hardy {
namespace {

void require_order(CorrespondenceKind kind) {
  if (kind.k < 0) throw DomainError("correspondence order k must be non-negative");
}

Complex i_power(int s) {
  switch (((s % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

int correspondence_weight(CorrespondenceKind kind) {
  return kind.kind == InequalityKind::hardy ? 4 * kind.k + 2 : 4 * kind.k;
}

TrigPoly fourier_image(const LatticeFunction& u) {
  const double norm = std::pow(2.0 * std::numbers::pi, -0.5 * u.dim());
  TrigPoly psi(u.dim(), true);
  u.for_each_unordered([&](const MultiIndex& n, double v) { psi.set(-n, Complex(norm * v, 0.0)); });
  return psi;
}

TrigPoly build_psi(const LatticeFunction& u, CorrespondenceKind kind) {
  require_order(kind);
  if (u.at(MultiIndex(u.dim())) != 0.0) throw PreconditionError("build_psi requires u(0) = 0");
  const int order = kind.kind == InequalityKind::hardy ? 2 * kind.k + 1 : 2 * kind.k;
  const Complex phase = i_power(order);
  const double norm = std::pow(2.0 * std::numbers::pi, -0.5 * u.dim());
  TrigPoly psi(u.dim());
  u.for_each_unordered([&](const MultiIndex& n, double v) {
    psi.set(-n, phase * (norm * v / norm_power(n, 2 * order)));
  });
  // psi is real exactly when u has the parity of s (u(-n) = (-1)^s u(n)).
  psi.set_real_valued(psi.is_hermitian(0.0));
  return psi;
}

double relative_error(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

CorrespondenceReport verify_norm_identity(const LatticeFunction& u, CorrespondenceKind kind) {
  const TrigPoly psi = build_psi(u, kind);
  CorrespondenceReport r;
  r.identity = "norm";
  r.kind = kind;
  r.dim = u.dim();
  r.lhs = weighted_norm_sq(u, correspondence_weight(kind));
  const Derivative op = kind.kind == InequalityKind::hardy ? Derivative::grad_laplacian(kind.k)
                                                           : Derivative::laplacian(kind.k);
  r.rhs = weighted_form(psi, op, 0);
  r.rel_err = relative_error(r.lhs, r.rhs);
  return r;
}

CorrespondenceReport verify_form_identity(const LatticeFunction& u, CorrespondenceKind kind) {
  const TrigPoly psi = build_psi(u, kind);
  CorrespondenceReport r;
  r.identity = "form";
  r.kind = kind;
  r.dim = u.dim();
  if (kind.kind == InequalityKind::hardy) {
    const int s = 2 * kind.k + 1;
    r.lhs = dirichlet_form(u, kind.k);
    r.rhs = std::pow(4.0, s) * weighted_form(psi, Derivative::laplacian(s), s);
  } else {
    const int s = 2 * kind.k;
    r.lhs = rellich_form(u, kind.k);
    r.rhs = std::pow(4.0, s) * weighted_form(psi, Derivative::laplacian(s), s);
  }
  r.rel_err = relative_error(r.lhs, r.rhs);
  return r;
}

double symbol_identity_error(const LatticeFunction& u) {
  const TrigPoly lhs = fourier_image(laplacian(u));
  const TrigPoly rhs = multiply_by_omega(fourier_image(u));
  double err = 0.0, scale = 0.0;
  for (const auto& [n, c] : rhs.coeffs().sorted_entries()) {
    err = std::max(err, std::abs(lhs.coefficient(n) - 4.0 * c));
    scale = std::max(scale, std::abs(4.0 * c));
  }
  for (const auto& [n, c] : lhs.coeffs().sorted_entries()) {
    err = std::max(err, std::abs(c - 4.0 * rhs.coefficient(n)));
    scale = std::max(scale, std::abs(c));
  }
  return scale == 0.0 ? 0.0 : err / scale;
}

}  // namespace lattice_hardy
