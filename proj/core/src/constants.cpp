#include "lattice_hardy/constants.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lattice_hardy/errors.hpp"

namespace lattice_hardy {
namespace {

std::string kd(int k, int d) { return " (got k=" + std::to_string(k) + ", d=" + std::to_string(d) + ")"; }

void require_nonpositive(int k) {
  if (k > 0) throw DomainError("weight exponent k must be non-positive" + kd(k, 0));
}

void require_hardy_domain(int k, int d) {
  require_nonpositive(k);
  if (!(d > -2 * k + 2)) throw DomainError("weighted Hardy constant requires d > -2k+2" + kd(k, d));
}

void require_hardy_rellich_domain(int k, int d) {
  require_nonpositive(k);
  if (!(d >= -6 * k + 8)) {
    throw DomainError("weighted Hardy-Rellich constant requires d >= -6k+8" + kd(k, d));
  }
}

void require_rellich_domain(int k, int d) {
  require_nonpositive(k);
  if (!(d > -2 * k + 4)) throw DomainError("weighted Rellich constant requires d > -2k+4" + kd(k, d));
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

// Unchecked pairs: callers guarantee the denominators are positive.
std::pair<Rational, Rational> hardy_pair(int k, int d) {
  const Rational base(d + 2 * k - 2);
  return {Rational(16) / (base * base), Rational(3 * d + 2 * k - 2) / (Rational(d) * base)};
}

std::pair<Rational, Rational> hardy_rellich_pair(int k, int d) {
  const Rational base(d - 2 * k);
  return {Rational(16) / (base * base), Rational(3 * d - 2 * k + 4) / (Rational(d) * base)};
}

// sum_{j=0}^{-k} d^j C1(k+j) prod_{i<j} C2(k+i) + d^{-k} prod_{i=0}^{-k} C2(k+i)
template <class PairFn>
Rational inverse_chain_sum(int k, int d, PairFn pair) {
  Rational total = 0;
  Rational c2_product = 1;
  Rational d_power = 1;
  for (int j = 0; j <= -k; ++j) {
    const auto [c1, c2] = pair(k + j, d);
    total += d_power * c1 * c2_product;
    c2_product *= c2;
    if (j < -k) d_power *= d;
  }
  total += d_power * c2_product;
  return total;
}

Rational hardy_inverse(int k, int d) { return inverse_chain_sum(k, d, hardy_pair); }
Rational hardy_rellich_inverse(int k, int d) { return inverse_chain_sum(k, d, hardy_rellich_pair); }

}  // namespace

std::string_view to_string(InequalityKind kind) {
  return kind == InequalityKind::hardy ? "hardy" : "rellich";
}

InequalityKind parse_inequality_kind(std::string_view text) {
  if (text == "hardy") return InequalityKind::hardy;
  if (text == "rellich") return InequalityKind::rellich;
  throw ArgumentError("unknown inequality kind '" + std::string(text) + "' (expected hardy|rellich)");
}

std::pair<Rational, Rational> hardy_c1c2_exact(int k, int d) {
  require_hardy_domain(k, d);
  return hardy_pair(k, d);
}

std::pair<double, double> hardy_c1c2(int k, int d) {
  const auto [a, b] = hardy_c1c2_exact(k, d);
  return {to_double(a), to_double(b)};
}

std::pair<Rational, Rational> hardy_rellich_c1c2_exact(int k, int d) {
  require_hardy_rellich_domain(k, d);
  return hardy_rellich_pair(k, d);
}

std::pair<double, double> hardy_rellich_c1c2(int k, int d) {
  const auto [a, b] = hardy_rellich_c1c2_exact(k, d);
  return {to_double(a), to_double(b)};
}

Rational weighted_hardy_constant_exact(int k, int d) {
  require_hardy_domain(k, d);
  return 1 / hardy_inverse(k, d);
}

double weighted_hardy_constant(int k, int d) { return to_double(weighted_hardy_constant_exact(k, d)); }

Rational weighted_hardy_rellich_constant_exact(int k, int d) {
  require_hardy_rellich_domain(k, d);
  return 1 / hardy_rellich_inverse(k, d);
}

double weighted_hardy_rellich_constant(int k, int d) {
  return to_double(weighted_hardy_rellich_constant_exact(k, d));
}

RellichParameters rellich_beta(double alpha, int d) {
  if (alpha > 0.0) throw DomainError("Rellich parameter alpha must be non-positive");
  if (!(d > -4.0 * alpha + 4.0)) {
    throw DomainError("Rellich parameters require d > -4alpha+4 (got alpha=" + std::to_string(alpha) +
                      ", d=" + std::to_string(d) + ")");
  }
  const double dd = d;
  const double disc = dd * dd - 4.0 * dd + 16.0 * alpha * alpha - 16.0 * alpha + 8.0;
  if (disc < 0.0) throw std::logic_error("negative discriminant in Rellich beta");
  const double beta = (-4.0 + 8.0 * alpha + std::sqrt(2.0) * std::sqrt(disc)) / 8.0;
  const double gamma = beta * (dd + 4.0 * beta - 4.0 * alpha) / 2.0;
  if (beta < 0.0 || gamma < 0.0 || beta * beta - beta * (2.0 * alpha - 1.0) < 0.0) {
    throw std::logic_error("Rellich parameters violate beta, gamma >= 0");
  }
  return {alpha, beta, gamma};
}

std::pair<double, double> rellich_c1c2(double alpha, int d) {
  const auto [a, b, g] = rellich_beta(alpha, d);
  const double dd = d;
  const double c1 = 2.0 * b * (dd - 2.0 * b + 2.0 * a - 1.0) / dd;
  const double c2 = b * (dd + 4.0 * b - 4.0 * a) * (dd + 2.0 * a - 2.0) * (2.0 * b - 2.0 * a + 1.0) / (2.0 * dd);
  const double c2_gamma = g * (dd + 2.0 * a - 2.0) * (2.0 * b - 2.0 * a + 1.0) / dd;
  if (std::abs(c2 - c2_gamma) > 1e-12 * std::max(1.0, std::abs(c2))) {
    throw std::logic_error("Rellich C_2: product form and gamma form disagree");
  }
  return {c1, c2};
}

double weighted_rellich_constant(int k, int d) {
  require_rellich_domain(k, d);
  const double alpha = k / 2.0;
  const auto [c1, c2] = rellich_c1c2(alpha, d);
  // HR is evaluated from its formula even below its own theorem's range
  // (d >= -6k+8); the formula stays positive for d > -2k+4.
  const double hr_inv = to_double(hardy_rellich_inverse(k, d));
  const double h_inv = to_double(hardy_inverse(k, d));
  const double dd = d;
  const double lead = (dd - 2.0 * k) * (dd - 2.0 * k) * (dd + 2.0 * k - 4.0) * (dd + 2.0 * k - 4.0);
  const double denom = 256.0 * (1.0 + hr_inv * (dd * c1 + dd * c2 * h_inv));
  return lead / denom;
}

double rellich_chain_constant(int m, int k, int d) {
  require_nonpositive(k);
  if (m < 0) throw DomainError("order m must be non-negative");
  if (!(d > -2 * k + 4 * m)) {
    throw DomainError("C(m,k,d) requires d > -2k+4m (got m=" + std::to_string(m) + ", k=" +
                      std::to_string(k) + ", d=" + std::to_string(d) + ")");
  }
  double c = 1.0;
  for (int i = 0; i < m; ++i) c *= weighted_rellich_constant(k - 2 * i, d);
  return c;
}

double hardy_chain_constant(int m, int k, int d) {
  require_nonpositive(k);
  if (m < 0) throw DomainError("order m must be non-negative");
  if (!(d > -2 * k + 4 * m + 2)) {
    throw DomainError("C~(m,k,d) requires d > -2k+4m+2 (got m=" + std::to_string(m) + ", k=" +
                      std::to_string(k) + ", d=" + std::to_string(d) + ")");
  }
  double c = weighted_hardy_constant(k, d);
  for (int i = 0; i < m; ++i) c *= weighted_rellich_constant(k - 2 * i - 1, d);
  return c;
}

HigherOrderConstants higher_order_constants(int m, int k, int d) {
  return {rellich_chain_constant(m, k, d), hardy_chain_constant(m, k, d)};
}

BoundBracket discrete_bound_bracket(int k, int d, InequalityKind kind) {
  if (k < 0) throw DomainError("discrete order k must be non-negative");
  BoundBracket b{k, d, kind, 0.0, 0.0};
  if (kind == InequalityKind::hardy) {
    if (!(d > 4 * k + 2)) throw DomainError("Hardy bound bracket requires d > 4k+2" + kd(k, d));
    b.lower = std::pow(4.0, 2 * k + 1) * hardy_chain_constant(k, 0, d);
    b.upper = std::pow(4.0 * d, 2 * k + 1);
  } else {
    if (!(d > 4 * k)) throw DomainError("Rellich bound bracket requires d > 4k" + kd(k, d));
    b.lower = std::pow(4.0, 2 * k) * rellich_chain_constant(k, 0, d);
    b.upper = std::pow(4.0 * d, 2 * k);
  }
  if (!(b.lower > 0.0 && b.lower <= b.upper)) {
    throw std::logic_error("bound bracket violates 0 < lower <= upper");
  }
  return b;
}

}  // namespace lattice_hardy
