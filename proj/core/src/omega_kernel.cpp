#include "lattice_hardy/omega_kernel.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_bessel.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <tuple>

#include "lattice_hardy/errors.hpp"
#include "lattice_hardy/multi_index.hpp"
#include "lattice_hardy/sparse_field.hpp"

namespace lattice_hardy {
namespace {

constexpr double kLogStep = 1.0 / 16.0;
constexpr double kLogMin = -45.0;
constexpr double kLogMaxCap = 120.0;
constexpr int kSeriesTerms = 30;
constexpr std::size_t kMaxTableSize = std::size_t{1} << 25;

double asymptotic_threshold(int kmax) { return std::max(60.0, 2.0 * (kmax + 2.0) * (kmax + 2.0)); }

// Coefficients a_j(k) of e^{-x} I_k(x) ~ (2 pi x)^{-1/2} sum_j (-1)^j a_j(k) x^{-j}.
std::vector<std::vector<double>> asymptotic_coefficients(int kmax) {
  std::vector<std::vector<double>> a(kSeriesTerms, std::vector<double>(static_cast<std::size_t>(kmax) + 1));
  for (int k = 0; k <= kmax; ++k) {
    const double mu = 4.0 * k * k;
    double term = 1.0;
    for (int j = 0; j < kSeriesTerms; ++j) {
      a[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = term;
      const double odd = 2.0 * j + 1.0;
      term *= (mu - odd * odd) / (8.0 * (j + 1));
    }
  }
  return a;
}

// c_k -> (1/2) c_k - (1/4)(c_{|k-1|} + c_{k+1}): Fourier coefficients after
// multiplying an even series by sin^2(x/2). Output is one entry shorter.
std::vector<double> sin2_stencil(const std::vector<double>& c) {
  std::vector<double> out(c.size() - 1);
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    const double left = c[k == 0 ? 1 : k - 1];
    out[k] = 0.5 * c[k] - 0.25 * (left + c[k + 1]);
  }
  return out;
}

// Per-node values of the 1-D factors g, g1 = sin^2 g, g2 = sin^4 g (index by |k|).
struct NodeFactors {
  std::vector<double> g, g1, g2;
  double weight = 0.0;  // t^p of the quadrature node
};

class FactorEvaluator {
 public:
  explicit FactorEvaluator(int kmax) : kmax_(kmax), x_asym_(asymptotic_threshold(kmax)) {
    const auto a = asymptotic_coefficients(kmax + 2);
    for (const auto& row : a) {
      series0_.push_back(row);
      series1_.push_back(sin2_stencil(row));
      series2_.push_back(sin2_stencil(series1_.back()));
    }
  }

  NodeFactors at(double x) const {
    NodeFactors f;
    if (x >= x_asym_) {
      const double scale = 1.0 / std::sqrt(2.0 * std::numbers::pi * x);
      f.g = sum_series(series0_, x, scale);
      f.g1 = sum_series(series1_, x, scale);
      f.g2 = sum_series(series2_, x, scale);
    } else {
      f.g.assign(static_cast<std::size_t>(kmax_) + 3, 0.0);
      scaled_bessel_values(x, kmax_ + 2, f.g);
      f.g1 = sin2_stencil(f.g);
      f.g2 = sin2_stencil(f.g1);
    }
    return f;
  }

 private:
  static std::vector<double> sum_series(const std::vector<std::vector<double>>& s, double x, double scale) {
    std::vector<double> out(s.front().size(), 0.0);
    // Horner in 1/x over the sign-alternating series.
    const double y = -1.0 / x;
    for (std::size_t k = 0; k < out.size(); ++k) {
      double acc = 0.0;
      for (std::size_t j = s.size(); j-- > 0;) acc = acc * y + s[j][k];
      out[k] = scale * acc;
    }
    return out;
  }

  int kmax_;
  double x_asym_;
  std::vector<std::vector<double>> series0_, series1_, series2_;
};

using Key = std::vector<int>;

Key canonical_key(std::span<const int> k, WeightShape shape, int axis) {
  Key key;
  key.reserve(k.size());
  if (shape == WeightShape::axis_sin2) {
    key.push_back(std::abs(k[static_cast<std::size_t>(axis)]));
    Key rest;
    for (std::size_t j = 0; j < k.size(); ++j) {
      if (static_cast<int>(j) != axis) rest.push_back(std::abs(k[j]));
    }
    std::sort(rest.begin(), rest.end());
    key.insert(key.end(), rest.begin(), rest.end());
  } else {
    for (int v : k) key.push_back(std::abs(v));
    std::sort(key.begin(), key.end());
  }
  return key;
}

double node_integrand(const NodeFactors& f, const Key& key, WeightShape shape) {
  const std::size_t d = key.size();
  switch (shape) {
    case WeightShape::plain: {
      double p = 1.0;
      for (int k : key) p *= f.g[static_cast<std::size_t>(k)];
      return p;
    }
    case WeightShape::axis_sin2: {
      double p = f.g1[static_cast<std::size_t>(key[0])];
      for (std::size_t j = 1; j < d; ++j) p *= f.g[static_cast<std::size_t>(key[j])];
      return p;
    }
    case WeightShape::sin4_sum: {
      double s = 0.0;
      for (std::size_t i = 0; i < d; ++i) {
        double p = f.g2[static_cast<std::size_t>(key[i])];
        for (std::size_t j = 0; j < d; ++j) {
          if (j != i) p *= f.g[static_cast<std::size_t>(key[j])];
        }
        s += p;
      }
      return s;
    }
  }
  return 0.0;
}

// Fourier coefficients of sin^2(x_axis/2) * w.
SparseField<double> times_sin2(const SparseField<double>& w, int axis) {
  SparseField<double> out(w.dim());
  for (const auto& [n, c] : w.sorted_entries()) {
    out.add(n, 0.5 * c);
    out.add(n.shifted(axis, 1), -0.25 * c);
    out.add(n.shifted(axis, -1), -0.25 * c);
  }
  return out;
}

SparseField<double> times_omega(const SparseField<double>& w) {
  SparseField<double> out(w.dim());
  for (int j = 0; j < w.dim(); ++j) {
    for (const auto& [n, c] : times_sin2(w, j).sorted_entries()) out.add(n, c);
  }
  return out;
}

}  // namespace

void scaled_bessel_values(double x, int kmax, std::span<double> out) {
  if (kmax < 0 || out.size() < static_cast<std::size_t>(kmax) + 1) {
    throw ArgumentError("scaled_bessel_values: output too small");
  }
  if (x < 0.0) throw ArgumentError("scaled_bessel_values: negative argument");
  if (x == 0.0) {
    std::fill(out.begin(), out.begin() + kmax + 1, 0.0);
    out[0] = 1.0;
    return;
  }
  if (x >= asymptotic_threshold(kmax)) {
    FactorEvaluator eval(std::max(kmax - 2, 0));
    const auto f = eval.at(x);
    std::copy(f.g.begin(), f.g.begin() + kmax + 1, out.begin());
    return;
  }
  gsl_error_handler_t* old = gsl_set_error_handler_off();
  const int status = gsl_sf_bessel_In_scaled_array(0, kmax, x, out.data());
  gsl_set_error_handler(old);
  if (status != GSL_SUCCESS && status != GSL_EUNDRFLW) {
    throw std::runtime_error("GSL scaled Bessel evaluation failed at x=" + std::to_string(x));
  }
}

int shape_order(WeightShape shape) {
  switch (shape) {
    case WeightShape::plain: return 0;
    case WeightShape::sin4_sum: return 2;
    case WeightShape::axis_sin2: return 1;
  }
  return 0;
}

bool weight_integrable(int dim, int power, WeightShape shape) {
  return dim + 2 * (shape_order(shape) + power) > 0;
}

WeightTable::WeightTable(int dim, int power, WeightShape shape, int max_shift)
    : dim_(dim), power_(power), shape_(shape), max_shift_(max_shift) {
  check_dimension(dim);
  if (max_shift < 0) throw ArgumentError("weight table needs a non-negative shift range");
  if (!weight_integrable(dim, power, shape)) {
    throw DomainError("weight omega^" + std::to_string(power) + " is not integrable in dimension " +
                      std::to_string(dim));
  }
  const std::ptrdiff_t side = 2 * max_shift + 1;
  std::ptrdiff_t size = 1;
  for (int j = 0; j < dim; ++j) {
    strides_.push_back(size);
    if (static_cast<double>(size) * side > static_cast<double>(kMaxTableSize)) {
      throw ResourceError("weight table of side " + std::to_string(side) + " in dimension " +
                          std::to_string(dim) + " exceeds the table budget");
    }
    size *= side;
    center_ += static_cast<std::ptrdiff_t>(max_shift) * strides_.back();
  }
  table_size_ = static_cast<std::size_t>(size);
  const int tables = shape == WeightShape::axis_sin2 ? dim : 1;
  values_.assign(table_size_ * static_cast<std::size_t>(tables), 0.0);

  std::map<Key, double> memo;

  SparseField<double> exact_poly(dim);
  std::vector<SparseField<double>> exact_axis;
  std::vector<NodeFactors> nodes;
  double prefactor = 0.0;
  double tail_rate = 0.0;

  if (power >= 0) {
    SparseField<double> w(dim);
    w.set(MultiIndex(dim), 1.0);
    for (int i = 0; i < power; ++i) w = times_omega(w);
    if (shape == WeightShape::plain) {
      exact_poly = std::move(w);
    } else if (shape == WeightShape::sin4_sum) {
      for (int i = 0; i < dim; ++i) {
        for (const auto& [n, c] : times_sin2(times_sin2(w, i), i).sorted_entries()) exact_poly.add(n, c);
      }
    } else {
      for (int i = 0; i < dim; ++i) exact_axis.push_back(times_sin2(w, i));
    }
  } else {
    const int p = -power;
    tail_rate = 0.5 * dim + shape_order(shape) - p;
    const double log_max = std::min(kLogMaxCap, 40.0 / tail_rate + 5.0);
    const FactorEvaluator eval(max_shift);
    for (double s = kLogMin; s <= log_max + 1e-12; s += kLogStep) {
      NodeFactors f = eval.at(0.5 * std::exp(s));
      f.weight = std::exp(p * s);
      nodes.push_back(std::move(f));
    }
    prefactor = kLogStep / std::tgamma(static_cast<double>(p));
  }

  auto integrate_key = [&](const Key& key) {
    double total = 0.0;
    double last = 0.0;
    for (const auto& f : nodes) {
      last = f.weight * node_integrand(f, key, shape);
      total += last;
    }
    // Tail beyond the last node decays like t^{-rate}.
    total += last / (tail_rate * kLogStep);
    return prefactor * total;
  };

  MultiIndex k(dim);
  for (int axis = 0; axis < tables; ++axis) {
    double* out = values_.data() + table_size_ * static_cast<std::size_t>(axis);
    for (std::size_t idx = 0; idx < table_size_; ++idx) {
      std::size_t rem = idx;
      for (int j = 0; j < dim; ++j) {
        k[j] = static_cast<int>(rem % static_cast<std::size_t>(side)) - max_shift;
        rem /= static_cast<std::size_t>(side);
      }
      if (power >= 0) {
        out[idx] = shape == WeightShape::axis_sin2 ? exact_axis[static_cast<std::size_t>(axis)].at(k)
                                                    : exact_poly.at(k);
        continue;
      }
      Key key = canonical_key(k.coords(), shape, axis);
      auto it = memo.find(key);
      if (it == memo.end()) it = memo.emplace(key, integrate_key(key)).first;
      out[idx] = it->second;
    }
  }
}

const double* WeightTable::data(int axis) const noexcept {
  const std::size_t a = shape_ == WeightShape::axis_sin2 ? static_cast<std::size_t>(axis) : 0;
  return values_.data() + a * table_size_;
}

double WeightTable::at(std::span<const int> k, int axis) const {
  if (static_cast<int>(k.size()) != dim_) throw ArgumentError("weight table index has wrong dimension");
  std::ptrdiff_t idx = center_;
  for (int j = 0; j < dim_; ++j) {
    const int v = k[static_cast<std::size_t>(j)];
    if (std::abs(v) > max_shift_) throw ArgumentError("weight table index outside the tabulated box");
    idx += v * strides_[static_cast<std::size_t>(j)];
  }
  return data(axis)[idx];
}

std::shared_ptr<const WeightTable> cached_weight_table(int dim, int power, WeightShape shape,
                                                       int max_shift) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int, int>, std::shared_ptr<const WeightTable>> cache;
  const auto key = std::make_tuple(dim, power, static_cast<int>(shape), max_shift);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto table = std::make_shared<const WeightTable>(dim, power, shape, max_shift);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(table)).first->second;
}

}  // namespace lattice_hardy
