#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lattice_hardy/box_operator.hpp"
#include "lattice_hardy/constants.hpp"
#include "lattice_hardy/lattice.hpp"

namespace lattice_hardy {

/// Default cap on |S|; the environment variable LATTICE_HARDY_BUDGET overrides it.
inline constexpr std::size_t kDefaultBasisBudget = 5'000'000;

/// Budget in effect: LATTICE_HARDY_BUDGET if set to a positive integer, else the default.
std::size_t basis_budget();

struct EstimateOptions {
  double tol = 1e-8;         ///< outer residual |Av - lambda Wv| <= tol |Wv|
  double inner_tol = 1e-10;  ///< relative residual of each CG solve
  int max_outer = 500;       ///< Lanczos restarts
  int max_inner = 200000;
  std::vector<int> axis_order;  ///< slot layout; empty means natural order
  std::size_t budget = 0;       ///< 0 means basis_budget()
  bool keep_vector = false;
};

struct EstimateResult {
  double value = 0.0;
  BoxSpec box;
  int k = 0;
  InequalityKind kind = InequalityKind::hardy;
  int iterations = 0;
  long long inner_iterations = 0;
  double residual = 0.0;        ///< |Av - lambda Wv| / |Wv|
  double quotient_check = 0.0;  ///< Rayleigh quotient of the returned vector, recomputed
  LatticeFunction eigenvector;  ///< filled when keep_vector is set
};

/// Smallest eigenvalue of A v = lambda W v on the box trial space, where A is
/// the restriction of Delta^{2k+1} (hardy) or Delta^{2k} (rellich) and
/// W = diag |n|^{-(4k+2)} or |n|^{-4k}. The value is an upper bound for the
/// sharp constant of the corresponding discrete inequality.
///
/// Restarted Lanczos on A^{-1} W (self-adjoint in the W inner product), one
/// conjugate-gradient solve per step, each cycle restarting from the best
/// Ritz vector. The start vector is all ones on S plus a fixed pseudo-random
/// perturbation, so ground states outside the fully symmetric sector are
/// reached as well.
EstimateResult estimate_sharp_constant(int k, int d, int radius, InequalityKind kind,
                                       const EstimateOptions& options = {});

/// Rayleigh quotient of the unit-sphere indicator:
/// dirichlet_form(u,k) / (2d) (hardy) or rellich_form(u,k) / (2d) (rellich).
double test_function_quotient(int k, int d, InequalityKind kind);

struct SweepRow {
  EstimateResult estimate;
  std::optional<BoundBracket> bracket;  ///< absent outside the bracket's dimension range
  double test_quotient = 0.0;
  bool contained = true;  ///< lower <= estimate <= test quotient <= upper
};

struct SweepTable {
  int k = 0;
  InequalityKind kind = InequalityKind::hardy;
  int radius = 0;
  std::vector<SweepRow> rows;
};

/// Estimates for every d in `dims`. All (d, R) combinations are checked
/// against the budget before any work starts. `threads` > 1 runs dimensions
/// concurrently; results do not depend on it.
SweepTable sweep(int k, InequalityKind kind, const std::vector<int>& dims, int radius,
                 const EstimateOptions& options = {}, int threads = 1);

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Least squares of log(value) against log(d). Needs >= 3 points, all
/// positive.
SlopeFit fit_log_slope(const std::vector<std::pair<double, double>>& points);

}  // namespace lattice_hardy
