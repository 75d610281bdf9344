#include "lattice_hardy/estimator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <random>
#include <string>
#include <thread>

#include <gsl/gsl_eigen.h>

#include "lattice_hardy/errors.hpp"

namespace lattice_hardy {
namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double weighted_dot(const std::vector<double>& a, const std::vector<double>& w, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * w[i] * b[i];
  return s;
}

// Solves A x = b by conjugate gradients, starting from the given x.
int conjugate_gradient(const BoxOperator& op, const std::vector<double>& b, std::vector<double>& x,
                       double rel_tol, int max_iter) {
  const std::size_t n = b.size();
  std::vector<double> r(n), p(n), ap(n);
  op.apply(x, ap);
  for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - ap[i];
  p = r;
  double rr = dot(r, r);
  const double target = rel_tol * rel_tol * dot(b, b);
  int it = 0;
  while (rr > target) {
    if (it >= max_iter) {
      throw ConvergenceError("conjugate-gradient inner solve did not converge", it, std::sqrt(rr));
    }
    op.apply(p, ap);
    const double pap = dot(p, ap);
    if (!(pap > 0.0)) throw ConvergenceError("operator is not positive definite on the trial space", it, std::sqrt(rr));
    const double alpha = rr / pap;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] += alpha * p[i];
      r[i] -= alpha * ap[i];
    }
    const double rr_new = dot(r, r);
    const double beta = rr_new / rr;
    rr = rr_new;
    for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
    ++it;
  }
  return it;
}

// Largest eigenvalue and its eigenvector for the symmetric tridiagonal matrix
// with diagonal `alpha` and off-diagonal `beta`.
double largest_ritz_vector(const std::vector<double>& alpha, const std::vector<double>& beta,
                           std::vector<double>& coeffs) {
  const std::size_t j = alpha.size();
  gsl_matrix* t = gsl_matrix_calloc(j, j);
  gsl_matrix* evec = gsl_matrix_alloc(j, j);
  gsl_vector* eval = gsl_vector_alloc(j);
  gsl_eigen_symmv_workspace* ws = gsl_eigen_symmv_alloc(j);
  for (std::size_t i = 0; i < j; ++i) {
    gsl_matrix_set(t, i, i, alpha[i]);
    if (i + 1 < j) {
      gsl_matrix_set(t, i, i + 1, beta[i]);
      gsl_matrix_set(t, i + 1, i, beta[i]);
    }
  }
  gsl_eigen_symmv(t, eval, evec, ws);
  gsl_eigen_symmv_sort(eval, evec, GSL_EIGEN_SORT_VAL_DESC);
  coeffs.resize(j);
  for (std::size_t i = 0; i < j; ++i) coeffs[i] = gsl_matrix_get(evec, i, 0);
  const double top = gsl_vector_get(eval, 0);
  gsl_eigen_symmv_free(ws);
  gsl_vector_free(eval);
  gsl_matrix_free(evec);
  gsl_matrix_free(t);
  return top;
}

int laplacian_power_for(int k, InequalityKind kind) { return kind == InequalityKind::hardy ? 2 * k + 1 : 2 * k; }
int weight_exponent_for(int k, InequalityKind kind) { return kind == InequalityKind::hardy ? 4 * k + 2 : 4 * k; }

void check_feasible(int k, int d, int radius, const EstimateOptions& options) {
  if (k < 0) throw DomainError("order k must be non-negative");
  check_dimension(d);
  if (radius < 1) throw ArgumentError("box radius must be at least 1");
  if (!(options.tol > 0.0) || !(options.inner_tol > 0.0)) throw ArgumentError("tolerances must be positive");
  const std::size_t budget = options.budget > 0 ? options.budget : basis_budget();
  const double size = std::pow(2.0 * radius + 1.0, d) - 1.0;
  if (size > static_cast<double>(budget)) {
    throw ResourceError("trial space of " + std::to_string(static_cast<long long>(size)) + " sites (d=" +
                        std::to_string(d) + ", R=" + std::to_string(radius) + ") exceeds the budget of " +
                        std::to_string(budget));
  }
}

}  // namespace

std::size_t basis_budget() {
  if (const char* env = std::getenv("LATTICE_HARDY_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultBasisBudget;
}

EstimateResult estimate_sharp_constant(int k, int d, int radius, InequalityKind kind, const EstimateOptions& options) {
  check_feasible(k, d, radius, options);
  const BoxSpec box{d, radius};
  const BoxOperator op(box, laplacian_power_for(k, kind), options.axis_order);
  const std::size_t n = op.slots();
  const std::size_t origin = op.origin_slot();
  const int s = weight_exponent_for(k, kind);

  std::vector<double> w(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (i != origin) w[i] = 1.0 / norm_power(op.site(i), s);
  }

  std::vector<double> v(n, 0.0);
  {
    std::mt19937_64 rng(0x5eedULL);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double x = 1.0 + 0.5 * uni(rng);
      if (i != origin) v[i] = x;
    }
  }
  auto normalize = [&](std::vector<double>& x) {
    const double norm = std::sqrt(weighted_dot(x, w, x));
    for (double& e : x) e /= norm;
  };
  normalize(v);

  EstimateResult result;
  result.box = box;
  result.k = k;
  result.kind = kind;

  // Restarted Lanczos for the largest eigenvalue 1/lambda of A^{-1} W, which
  // is self-adjoint in the W inner product. Each step is one CG solve; each
  // cycle restarts from the best Ritz vector.
  const std::size_t sites = n - 1;
  const std::size_t memory_steps = (std::size_t{1} << 28) / (sizeof(double) * n);
  const std::size_t m = std::min<std::size_t>(sites, std::clamp<std::size_t>(memory_steps, 8, 40));
  std::vector<std::vector<double>> q;
  std::vector<double> alpha, beta, av(n), z(n), ritz;

  double lambda = 0.0;
  double residual = 0.0;
  std::vector<double> coeffs;
  for (int cycle = 1; cycle <= options.max_outer; ++cycle) {
    q.assign(1, v);
    alpha.clear();
    beta.clear();
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        av[i] = w[i] * q[j][i];
        z[i] = 0.0;
      }
      result.inner_iterations += conjugate_gradient(op, av, z, options.inner_tol, options.max_inner);
      alpha.push_back(weighted_dot(q[j], w, z));
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& qi : q) {
          const double c = weighted_dot(qi, w, z);
          for (std::size_t i = 0; i < n; ++i) z[i] -= c * qi[i];
        }
      }
      z[origin] = 0.0;
      const double b = std::sqrt(weighted_dot(z, w, z));
      if (j + 1 == m || b <= 1e-14 * std::abs(alpha.back())) break;
      // Ritz residual |b s_j| against the Ritz value; the true residual is checked below.
      const double theta = largest_ritz_vector(alpha, beta, coeffs);
      if (std::abs(b * coeffs.back()) <= 1e-3 * options.tol * theta) break;
      beta.push_back(b);
      for (double& e : z) e /= b;
      q.push_back(z);
    }
    largest_ritz_vector(alpha, beta, coeffs);
    std::fill(v.begin(), v.end(), 0.0);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      for (std::size_t i = 0; i < n; ++i) v[i] += coeffs[j] * q[j][i];
    }
    // One inverse-iteration step: A v then equals W times the Ritz vector up to
    // the CG residual, so the outer residual is not amplified by A.
    for (std::size_t i = 0; i < n; ++i) {
      av[i] = w[i] * v[i];
      z[i] = 0.0;
    }
    result.inner_iterations += conjugate_gradient(op, av, z, options.inner_tol, options.max_inner);
    v.swap(z);
    v[origin] = 0.0;
    normalize(v);
    op.apply(v, av);
    lambda = dot(v, av);
    double rn = 0.0, wn = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double wvi = w[i] * v[i];
      const double ri = av[i] - lambda * wvi;
      rn += ri * ri;
      wn += wvi * wvi;
    }
    residual = std::sqrt(rn / wn);
    result.iterations = cycle;
    if (residual <= options.tol) break;
  }
  if (!(residual <= options.tol)) {
    throw ConvergenceError("Lanczos iteration did not reach the residual tolerance", result.iterations, residual);
  }
  result.value = lambda;
  result.residual = residual;
  op.apply(v, av);
  result.quotient_check = dot(v, av) / weighted_dot(v, w, v);
  if (options.keep_vector) result.eigenvector = op.extend(v);
  return result;
}

double test_function_quotient(int k, int d, InequalityKind kind) {
  if (k < 0) throw DomainError("order k must be non-negative");
  const LatticeFunction u = unit_sphere_indicator(d);
  const double form = kind == InequalityKind::hardy ? dirichlet_form(u, k) : rellich_form(u, k);
  return form / weighted_norm_sq(u, weight_exponent_for(k, kind));
}

SweepTable sweep(int k, InequalityKind kind, const std::vector<int>& dims, int radius, const EstimateOptions& options,
                 int threads) {
  for (int d : dims) check_feasible(k, d, radius, options);
  SweepTable table;
  table.k = k;
  table.kind = kind;
  table.radius = radius;
  table.rows.resize(dims.size());

  auto run_one = [&](std::size_t i) {
    const int d = dims[i];
    SweepRow row;
    row.estimate = estimate_sharp_constant(k, d, radius, kind, options);
    row.test_quotient = test_function_quotient(k, d, kind);
    const bool in_range = kind == InequalityKind::hardy ? d > 4 * k + 2 : d > 4 * k;
    const double v = row.estimate.value;
    const double slack = 1.0 + options.tol;
    row.contained = v <= row.test_quotient * slack;
    if (in_range) {
      row.bracket = discrete_bound_bracket(k, d, kind);
      row.contained = row.contained && row.bracket->lower <= v * slack &&
                      row.test_quotient <= row.bracket->upper * (1.0 + 1e-12);
    }
    table.rows[i] = std::move(row);
  };

  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), dims.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < dims.size(); ++i) run_one(i);
    return table;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(dims.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < dims.size(); i = next++) {
        try {
          run_one(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return table;
}

SlopeFit fit_log_slope(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3) throw ArgumentError("slope fit needs at least 3 points");
  double sx = 0.0, sy = 0.0;
  for (const auto& [d, v] : points) {
    if (!(d > 0.0) || !(v > 0.0)) throw ArgumentError("slope fit needs positive dimensions and values");
    sx += std::log(d);
    sy += std::log(v);
  }
  const double n = static_cast<double>(points.size());
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& [d, v] : points) {
    const double dx = std::log(d) - mx, dy = std::log(v) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw ArgumentError("slope fit needs at least two distinct dimensions");
  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

}  // namespace lattice_hardy
