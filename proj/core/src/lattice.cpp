#include "lattice_hardy/lattice.hpp"

#include <cmath>
#include <random>
#include <string>

#include "lattice_hardy/errors.hpp"

namespace lattice_hardy {

LatticeFunction delta(const MultiIndex& site, double value) {
  LatticeFunction u(site.dim());
  u.set(site, value);
  return u;
}

LatticeFunction backward_difference(const LatticeFunction& u, int axis) {
  if (axis < 0 || axis >= u.dim()) {
    throw ArgumentError("axis " + std::to_string(axis) + " out of range for dimension " +
                        std::to_string(u.dim()));
  }
  LatticeFunction out(u.dim());
  out.reserve(2 * u.size());
  for (const auto& [n, v] : u.sorted_entries()) {
    out.add(n, v);
    out.add(n.shifted(axis, 1), -v);
  }
  return out;
}

LatticeFunction laplacian(const LatticeFunction& u) {
  const int d = u.dim();
  LatticeFunction out(d);
  out.reserve((2 * static_cast<std::size_t>(d) + 1) * u.size());
  for (const auto& [n, v] : u.sorted_entries()) {
    out.add(n, 2.0 * d * v);
    for (int j = 0; j < d; ++j) {
      out.add(n.shifted(j, -1), -v);
      out.add(n.shifted(j, 1), -v);
    }
  }
  return out;
}

LatticeFunction laplacian_power(const LatticeFunction& u, int k) {
  if (k < 0) throw ArgumentError("Laplacian power must be non-negative");
  LatticeFunction w = u;
  for (int i = 0; i < k; ++i) w = laplacian(w);
  return w;
}

LatticeFunction translate(const LatticeFunction& u, const MultiIndex& shift) {
  LatticeFunction out(u.dim());
  out.reserve(u.size());
  u.for_each_unordered([&](const MultiIndex& n, double v) { out.set(n + shift, v); });
  return out;
}

LatticeFunction scaled(const LatticeFunction& u, double factor) {
  LatticeFunction out(u.dim());
  u.for_each_unordered([&](const MultiIndex& n, double v) { out.set(n, factor * v); });
  return out;
}

LatticeFunction sum(const LatticeFunction& u, const LatticeFunction& v) {
  LatticeFunction out = u;
  for (const auto& [n, x] : v.sorted_entries()) out.add(n, x);
  return out;
}

double inner_product(const LatticeFunction& u, const LatticeFunction& v) {
  if (u.dim() != v.dim()) throw ArgumentError("inner product of fields of different dimension");
  const LatticeFunction& small = u.size() <= v.size() ? u : v;
  const LatticeFunction& large = u.size() <= v.size() ? v : u;
  double s = 0.0;
  for (const auto& [n, x] : small.sorted_entries()) s += x * large.at(n);
  return s;
}

double squared_norm(const LatticeFunction& u) {
  double s = 0.0;
  for (const auto& [n, x] : u.sorted_entries()) s += x * x;
  return s;
}

double dirichlet_form(const LatticeFunction& u, int k) {
  const LatticeFunction w = laplacian_power(u, k);
  double s = 0.0;
  for (int j = 0; j < u.dim(); ++j) s += squared_norm(backward_difference(w, j));
  return s;
}

double rellich_form(const LatticeFunction& u, int k) { return squared_norm(laplacian_power(u, k)); }

double norm_power(const MultiIndex& n, int s) {
  const double r2 = static_cast<double>(n.norm_sq());
  double p = 1.0;
  for (int i = 0; i < s / 2; ++i) p *= r2;
  if (s % 2 != 0) p *= std::sqrt(r2);
  return p;
}

double weighted_norm_sq(const LatticeFunction& u, int s) {
  if (s < 0) throw ArgumentError("weight exponent must be non-negative");
  const MultiIndex origin(u.dim());
  if (s > 0 && u.at(origin) != 0.0) {
    throw PreconditionError("weighted norm with singular weight |n|^-" + std::to_string(s) +
                            " requires u(0) = 0");
  }
  double total = 0.0;
  for (const auto& [n, x] : u.sorted_entries()) {
    if (s > 0 && n.is_zero()) continue;
    total += x * x / norm_power(n, s);
  }
  return total;
}

LatticeFunction unit_sphere_indicator(int dim) {
  LatticeFunction u(dim);
  for (int j = 0; j < dim; ++j) {
    u.set(MultiIndex::unit(dim, j, -1), 1.0);
    u.set(MultiIndex::unit(dim, j, 1), 1.0);
  }
  return u;
}

LatticeFunction random_lattice_function(int dim, int radius, std::uint64_t seed) {
  check_dimension(dim);
  if (radius < 1) throw ArgumentError("support radius must be at least 1");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  LatticeFunction u(dim);
  MultiIndex n(dim);
  for (int j = 0; j < dim; ++j) n[j] = -radius;
  while (true) {
    const double v = uni(rng);
    if (!n.is_zero()) u.set(n, v);
    int j = dim - 1;
    while (j >= 0 && n[j] == radius) {
      n[j] = -radius;
      --j;
    }
    if (j < 0) break;
    ++n[j];
  }
  return u;
}

}  // namespace lattice_hardy
