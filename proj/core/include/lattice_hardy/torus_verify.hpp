#pragma once

#include <optional>
#include <string>

#include "lattice_hardy/torus_integrals.hpp"
#include "lattice_hardy/trig_poly.hpp"

namespace lattice_hardy {

struct VerifyOptions {
  IntegralOptions integrals;
  double exact_tolerance = 1e-8;   ///< when every integral is a finite sum
  double approx_tolerance = 1e-4;  ///< when a singular weight is involved
};

/// Outcome of checking  constant * lhs_integral <= rhs_integral.
struct TorusReport {
  std::string inequality;
  int dim = 0;
  int k = 0;
  int m = 0;
  double constant = 0.0;
  double lhs_integral = 0.0;
  double rhs_integral = 0.0;
  double lhs = 0.0;  ///< constant * lhs_integral
  double rhs = 0.0;
  std::optional<double> ratio;  ///< rhs_integral / lhs_integral, absent for psi = 0
  bool holds = true;
  bool exact = false;
  double tolerance = 0.0;
  double diagnostic = 0.0;  ///< largest grid diagnostic, 0 for the kernel route
  IntegralMethod method = IntegralMethod::kernel;
};

/// H(k,d) int |psi|^2 omega^{k-1} <= int |grad psi|^2 omega^k; zero-average psi, d > -2k+2.
TorusReport verify_weighted_hardy(const TrigPoly& psi, int k, const VerifyOptions& options = {});

/// HR(k,d) int |grad psi|^2 omega^{k-1} <= int |Delta psi|^2 omega^k; d >= -6k+8.
TorusReport verify_weighted_hardy_rellich(const TrigPoly& psi, int k, const VerifyOptions& options = {});

/// R(k,d) int |psi|^2 omega^{k-2} <= int |Delta psi|^2 omega^k; d > -2k+4.
TorusReport verify_weighted_rellich(const TrigPoly& psi, int k, const VerifyOptions& options = {});

enum class HigherOrderForm {
  laplacian,  ///< C(m,k,d) int |psi|^2 omega^{k-2m} <= int |Delta^m psi|^2 omega^k
  gradient,   ///< C~(m,k,d) int |psi|^2 omega^{k-2m-1} <= int |grad Delta^m psi|^2 omega^k
};

TorusReport verify_higher_order(const TrigPoly& psi, int m, int k, HigherOrderForm form,
                                const VerifyOptions& options = {});

/// Terms of the two-parameter inequality
///   int omega^{2a} |Delta psi|^2 >= A G + B P + E,
///   A = 2 gamma - beta (d + 4 beta - 4 a),
///   B = (gamma/2)((2 beta - 2a + 1)(d + 4a - 4) - 2 gamma),
///   E = 2 beta (J1 + (2 beta - 2a + 1) J2) - 4 beta J3 - gamma (2 beta - 2a + 1)(J4 + 2(a - 1) J5),
/// with G = int omega^{2a-1}|grad psi|^2, P = int omega^{2a-2}|psi|^2,
/// J1 = int omega^{2a}|grad psi|^2, J2 = int S4 omega^{2a-2}|grad psi|^2,
/// J3 = int omega^{2a-1} sum_i sin^2(x_i/2)|d_i psi|^2, J4 = int omega^{2a-1}|psi|^2,
/// J5 = int S4 omega^{2a-3}|psi|^2, S4 = sum_i sin^4(x_i/2).
struct TwoParameterReport {
  int dim = 0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double coeff_gradient = 0.0;  ///< A
  double coeff_mass = 0.0;      ///< B
  double gradient_term = 0.0;   ///< G
  double mass_term = 0.0;       ///< P
  double j1 = 0.0, j2 = 0.0, j3 = 0.0, j4 = 0.0, j5 = 0.0;
  double remainder = 0.0;  ///< E
  double scale = 0.0;      ///< sum of absolute values of all terms
  bool holds = true;
  bool exact = false;
  double tolerance = 0.0;
  double diagnostic = 0.0;
  IntegralMethod method = IntegralMethod::kernel;
};

/// Whether (alpha, beta) satisfy beta^2 - beta(2 alpha - 1) >= 0.
bool two_parameter_admissible(double alpha, double beta);

/// holds = lhs >= rhs - tolerance * scale. Requires alpha <= 0, 2 alpha an
/// integer, d > -4 alpha + 4 and admissible beta.
TwoParameterReport verify_two_parameter_inequality(const TrigPoly& psi, double alpha, double beta, double gamma,
                                                   const VerifyOptions& options = {});

}  // namespace lattice_hardy
