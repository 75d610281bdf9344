#pragma once

#include <cstdint>

#include "lattice_hardy/multi_index.hpp"
#include "lattice_hardy/sparse_field.hpp"

namespace lattice_hardy {

/// Finitely supported real function on Z^d.
using LatticeFunction = SparseField<double>;

/// Kronecker delta at `site`.
LatticeFunction delta(const MultiIndex& site, double value = 1.0);

/// D_j u(n) = u(n) - u(n - e_j). `axis` is zero based.
LatticeFunction backward_difference(const LatticeFunction& u, int axis);

/// Positive discrete Laplacian: sum_j 2u(n) - u(n - e_j) - u(n + e_j).
LatticeFunction laplacian(const LatticeFunction& u);

/// k-fold Laplacian; k = 0 is the identity.
LatticeFunction laplacian_power(const LatticeFunction& u, int k);

LatticeFunction translate(const LatticeFunction& u, const MultiIndex& shift);
LatticeFunction scaled(const LatticeFunction& u, double factor);
LatticeFunction sum(const LatticeFunction& u, const LatticeFunction& v);

double inner_product(const LatticeFunction& u, const LatticeFunction& v);
double squared_norm(const LatticeFunction& u);

/// sum_n sum_j |D_j (Delta^k u)(n)|^2, the left side of the discrete Hardy
/// inequality of order k.
double dirichlet_form(const LatticeFunction& u, int k);

/// sum_n |Delta^k u(n)|^2, the left side of the discrete Rellich inequality.
double rellich_form(const LatticeFunction& u, int k);

/// sum_{n != 0} |u(n)|^2 / |n|^s. Requires u(0) = 0 when s > 0.
double weighted_norm_sq(const LatticeFunction& u, int s);

/// Indicator of the 2d unit vectors {+-e_j}; the standard test function for
/// the upper bounds C_1(k,d) <= (4d)^{2k+1}, C_2(k,d) <= (4d)^{2k}.
LatticeFunction unit_sphere_indicator(int dim);

/// Uniform [-1, 1] values on the l-infinity ball of `radius`, origin excluded.
/// Deterministic in `seed`.
LatticeFunction random_lattice_function(int dim, int radius, std::uint64_t seed);

/// |n|^s with |n|^2 taken exactly; even s uses only integer powers of |n|^2.
double norm_power(const MultiIndex& n, int s);

}  // namespace lattice_hardy
