#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <Eigen/Dense>

#include "lattice_hardy/constants.hpp"
#include "lattice_hardy/lattice.hpp"

// Independent reference implementations used only by the test suites.
namespace oracle {

using Big = boost::multiprecision::cpp_bin_float_50;

// Weighted torus constants evaluated straight from the printed sum/product
// formulas in 50-digit arithmetic. No domain checks.
Big hardy_inverse(int k, int d);
Big hardy_rellich_inverse(int k, int d);
Big rellich_beta(Big alpha, int d);
Big rellich_constant(int k, int d);
Big rellich_chain(int m, int k, int d);
Big hardy_chain(int m, int k, int d);

inline double to_double(const Big& x) { return x.convert_to<double>(); }

// Dense matrices of the box problem on S = {0 < |n|_inf <= radius}, built
// column by column from the sparse lattice operators applied to deltas:
//   A_ij = <D Delta^k e_i, D Delta^k e_j>  (hardy)  or  <Delta^k e_i, Delta^k e_j>  (rellich)
//   W    = diag |n|^{-(4k+2)}  or  diag |n|^{-4k}.
struct DenseBoxProblem {
  std::vector<lattice_hardy::MultiIndex> sites;
  Eigen::MatrixXd a;
  Eigen::VectorXd w;
};

DenseBoxProblem dense_box_problem(int k, int d, int radius, lattice_hardy::InequalityKind kind);

// Smallest generalized eigenvalue of A v = lambda W v.
double smallest_generalized_eigenvalue(const DenseBoxProblem& p);

}  // namespace oracle
