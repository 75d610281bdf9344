#include "lattice_hardy/torus_verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lattice_hardy/constants.hpp"
#include "lattice_hardy/errors.hpp"

namespace lattice_hardy {
namespace {

void require_zero_average(const TrigPoly& psi, const char* what) {
  if (!psi.has_zero_average()) {
    throw PreconditionError(std::string(what) + " requires a zero-average polynomial (no constant term)");
  }
}

struct Side {
  Derivative op;
  int power;
};

TorusReport compare(std::string name, const TrigPoly& psi, int k, int m, double constant, Side left, Side right,
                    const VerifyOptions& options) {
  TorusReport r;
  r.inequality = std::move(name);
  r.dim = psi.dim();
  r.k = k;
  r.m = m;
  r.constant = constant;
  r.method = options.integrals.method;
  const auto lv = torus_integral(psi, left.op, left.power, WeightShape::plain, options.integrals);
  const auto rv = torus_integral(psi, right.op, right.power, WeightShape::plain, options.integrals);
  r.lhs_integral = lv.value;
  r.rhs_integral = rv.value;
  r.lhs = constant * lv.value;
  r.rhs = rv.value;
  r.exact = lv.exact && rv.exact;
  r.tolerance = r.exact ? options.exact_tolerance : options.approx_tolerance;
  r.diagnostic = std::max(lv.diagnostic, rv.diagnostic);
  if (lv.value > 0.0) r.ratio = rv.value / lv.value;
  r.holds = psi.empty() || r.lhs <= r.rhs * (1.0 + r.tolerance);
  return r;
}

}  // namespace

TorusReport verify_weighted_hardy(const TrigPoly& psi, int k, const VerifyOptions& options) {
  const double c = weighted_hardy_constant(k, psi.dim());
  require_zero_average(psi, "weighted Hardy inequality");
  return compare("hardy", psi, k, 0, c, {Derivative::none(), k - 1}, {Derivative::grad(), k}, options);
}

TorusReport verify_weighted_hardy_rellich(const TrigPoly& psi, int k, const VerifyOptions& options) {
  const double c = weighted_hardy_rellich_constant(k, psi.dim());
  require_zero_average(psi, "weighted Hardy-Rellich inequality");
  return compare("hr", psi, k, 0, c, {Derivative::grad(), k - 1}, {Derivative::laplacian(1), k}, options);
}

TorusReport verify_weighted_rellich(const TrigPoly& psi, int k, const VerifyOptions& options) {
  const double c = weighted_rellich_constant(k, psi.dim());
  require_zero_average(psi, "weighted Rellich inequality");
  return compare("rellich", psi, k, 0, c, {Derivative::none(), k - 2}, {Derivative::laplacian(1), k}, options);
}

TorusReport verify_higher_order(const TrigPoly& psi, int m, int k, HigherOrderForm form,
                                const VerifyOptions& options) {
  require_zero_average(psi, "higher-order Hardy/Rellich inequality");
  if (form == HigherOrderForm::laplacian) {
    const double c = rellich_chain_constant(m, k, psi.dim());
    return compare("higher-laplacian", psi, k, m, c, {Derivative::none(), k - 2 * m},
                   {Derivative::laplacian(m), k}, options);
  }
  const double c = hardy_chain_constant(m, k, psi.dim());
  return compare("higher-gradient", psi, k, m, c, {Derivative::none(), k - 2 * m - 1},
                 {Derivative::grad_laplacian(m), k}, options);
}

bool two_parameter_admissible(double alpha, double beta) { return beta * beta - beta * (2.0 * alpha - 1.0) >= 0.0; }

TwoParameterReport verify_two_parameter_inequality(const TrigPoly& psi, double alpha, double beta, double gamma,
                                                   const VerifyOptions& options) {
  const int d = psi.dim();
  if (alpha > 0.0) throw DomainError("two-parameter inequality requires alpha <= 0");
  const double two_alpha = 2.0 * alpha;
  if (two_alpha != std::round(two_alpha)) throw ArgumentError("2*alpha must be an integer");
  if (!(d > -4.0 * alpha + 4.0)) throw DomainError("two-parameter inequality requires d > -4alpha+4");
  if (!two_parameter_admissible(alpha, beta)) {
    throw DomainError("two-parameter inequality requires beta^2 - beta(2alpha-1) >= 0");
  }
  const int a2 = static_cast<int>(two_alpha);

  TwoParameterReport r;
  r.dim = d;
  r.alpha = alpha;
  r.beta = beta;
  r.gamma = gamma;
  r.method = options.integrals.method;
  bool exact = true;
  double diag = 0.0;
  auto integral = [&](Derivative op, int power, WeightShape shape) {
    const auto v = torus_integral(psi, op, power, shape, options.integrals);
    exact = exact && v.exact;
    diag = std::max(diag, v.diagnostic);
    return v.value;
  };
  r.lhs = integral(Derivative::laplacian(1), a2, WeightShape::plain);
  r.gradient_term = integral(Derivative::grad(), a2 - 1, WeightShape::plain);
  r.mass_term = integral(Derivative::none(), a2 - 2, WeightShape::plain);
  r.j1 = integral(Derivative::grad(), a2, WeightShape::plain);
  r.j2 = integral(Derivative::grad(), a2 - 2, WeightShape::sin4_sum);
  r.j3 = integral(Derivative::grad(), a2 - 1, WeightShape::axis_sin2);
  r.j4 = integral(Derivative::none(), a2 - 1, WeightShape::plain);
  r.j5 = integral(Derivative::none(), a2 - 3, WeightShape::sin4_sum);

  const double b = beta, g = gamma, a = alpha;
  const double s = 2.0 * b - 2.0 * a + 1.0;
  r.coeff_gradient = 2.0 * g - b * (d + 4.0 * b - 4.0 * a);
  r.coeff_mass = 0.5 * g * (s * (d + 4.0 * a - 4.0) - 2.0 * g);
  const double e1 = 2.0 * b * r.j1;
  const double e2 = 2.0 * b * s * r.j2;
  const double e3 = -4.0 * b * r.j3;
  const double e4 = -g * s * r.j4;
  const double e5 = -g * s * 2.0 * (a - 1.0) * r.j5;
  r.remainder = e1 + e2 + e3 + e4 + e5;
  const double tg = r.coeff_gradient * r.gradient_term;
  const double tm = r.coeff_mass * r.mass_term;
  r.rhs = tg + tm + r.remainder;
  r.scale = std::abs(r.lhs) + std::abs(tg) + std::abs(tm) + std::abs(e1) + std::abs(e2) + std::abs(e3) +
            std::abs(e4) + std::abs(e5);
  r.exact = exact;
  r.diagnostic = diag;
  r.tolerance = exact ? options.exact_tolerance : options.approx_tolerance;
  r.holds = r.lhs >= r.rhs - r.tolerance * r.scale;
  return r;
}

}  // namespace lattice_hardy
