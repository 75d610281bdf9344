#pragma once

#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace lattice_hardy {

using Rational = boost::multiprecision::cpp_rational;

/// Which discrete inequality a bound, estimate or correspondence refers to:
/// hardy ~ sum |D Delta^k u|^2 >= C |u|^2/|n|^{4k+2},
/// rellich ~ sum |Delta^k u|^2 >= C |u|^2/|n|^{4k}.
enum class InequalityKind { hardy, rellich };

std::string_view to_string(InequalityKind kind);
InequalityKind parse_inequality_kind(std::string_view text);

// ---------------------------------------------------------------------------
// Torus constants. Three different (C_1, C_2) pairs enter the torus
// inequalities; they are kept apart by name:
//
//   hardy_c1c2(k, d)          16/(d+2k-2)^2,  (3d+2k-2)/(d(d+2k-2))
//   hardy_rellich_c1c2(k, d)  16/(d-2k)^2,    (3d-2k+4)/(d(d-2k))
//   rellich_c1c2(alpha, d)    2b(d-2b+2a-1)/d, b(d+4b-4a)(d+2a-2)(2b-2a+1)/(2d)
//
// All take a non-positive weight exponent k (or alpha) and throw DomainError
// outside the documented dimension range.
// ---------------------------------------------------------------------------

/// Requires k <= 0 and d > -2k + 2.
std::pair<Rational, Rational> hardy_c1c2_exact(int k, int d);
std::pair<double, double> hardy_c1c2(int k, int d);

/// Requires k <= 0 and d >= -6k + 8.
std::pair<Rational, Rational> hardy_rellich_c1c2_exact(int k, int d);
std::pair<double, double> hardy_rellich_c1c2(int k, int d);

/// H(k, d) of the weighted torus Hardy inequality
///   H int |psi|^2 w^{k-1} <= int |grad psi|^2 w^k,   w = sum_j sin^2(x_j/2).
/// H(0, d) = d(d-2)^2 / (3d^2 + 8d + 4).
Rational weighted_hardy_constant_exact(int k, int d);
double weighted_hardy_constant(int k, int d);

/// HR(k, d) of the weighted Hardy-Rellich inequality
///   HR int |grad psi|^2 w^{k-1} <= int |Delta psi|^2 w^k,  d >= -6k + 8.
/// HR(0, d) = d^2 / (3d + 20).
Rational weighted_hardy_rellich_constant_exact(int k, int d);
double weighted_hardy_rellich_constant(int k, int d);

struct RellichParameters {
  double alpha;
  double beta;
  double gamma;  ///< 2 gamma = beta (d + 4 beta - 4 alpha)
};

/// beta = (-4 + 8a + sqrt(2) sqrt(d^2 - 4d + 16a^2 - 16a + 8)) / 8 and the
/// matching gamma. Requires alpha <= 0 and d > -4 alpha + 4.
RellichParameters rellich_beta(double alpha, int d);

/// The (C_1, C_2) pair of the weighted Rellich inequality, evaluated at the
/// beta of rellich_beta. C_2 is computed in both printed forms (with the
/// explicit product and with gamma); a mismatch is a logic_error.
std::pair<double, double> rellich_c1c2(double alpha, int d);

/// R(k, d) of the weighted torus Rellich inequality
///   R int |psi|^2 w^{k-2} <= int |Delta psi|^2 w^k,   d > -2k + 4.
double weighted_rellich_constant(int k, int d);

/// C(m, k, d) = prod_{i<m} R(k - 2i, d); requires d > -2k + 4m.
double rellich_chain_constant(int m, int k, int d);

/// C~(m, k, d) = H(k, d) prod_{i<m} R(k - 2i - 1, d); requires d > -2k + 4m + 2.
double hardy_chain_constant(int m, int k, int d);

struct HigherOrderConstants {
  double laplacian_power;           ///< C(m, k, d)
  double gradient_laplacian_power;  ///< C~(m, k, d)
};

/// Both chain constants; requires the stricter d > -2k + 4m + 2.
HigherOrderConstants higher_order_constants(int m, int k, int d);

/// Provable lower bound and test-function upper bound for a discrete sharp
/// constant C_1(k, d) (hardy) or C_2(k, d) (rellich).
struct BoundBracket {
  int k = 0;
  int d = 0;
  InequalityKind kind = InequalityKind::hardy;
  double lower = 0.0;
  double upper = 0.0;
};

/// hardy:   lower = 4^{2k+1} C~(k, 0, d), upper = (4d)^{2k+1};  d > 4k + 2.
/// rellich: lower = 4^{2k}   C(k, 0, d),  upper = (4d)^{2k};    d > 4k.
BoundBracket discrete_bound_bracket(int k, int d, InequalityKind kind);

}  // namespace lattice_hardy
