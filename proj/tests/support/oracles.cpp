#include "oracles.hpp"

#include <Eigen/Eigenvalues>

#include "lattice_hardy/trig_poly.hpp"

namespace oracle {

namespace {

Big product_sum_inverse(int k, int d, Big (*c1)(int, int), Big (*c2)(int, int)) {
  Big total = 0;
  Big prod = 1;  // prod_{i<j} C2(k+i)
  Big dpow = 1;
  for (int j = 0; j <= -k; ++j) {
    total += dpow * c1(k + j, d) * prod;
    prod *= c2(k + j, d);
    dpow *= d;
  }
  // after the loop dpow = d^{-k+1}, prod = prod_{i=0}^{-k} C2(k+i)
  return total + (dpow / d) * prod;
}

Big h_c1(int k, int d) {
  Big den = d + 2 * k - 2;
  return 16 / (den * den);
}
Big h_c2(int k, int d) { return Big(3 * d + 2 * k - 2) / (Big(d) * (d + 2 * k - 2)); }
Big hr_c1(int k, int d) {
  Big den = d - 2 * k;
  return 16 / (den * den);
}
Big hr_c2(int k, int d) { return Big(3 * d - 2 * k + 4) / (Big(d) * (d - 2 * k)); }

}  // namespace

Big hardy_inverse(int k, int d) { return product_sum_inverse(k, d, h_c1, h_c2); }
Big hardy_rellich_inverse(int k, int d) { return product_sum_inverse(k, d, hr_c1, hr_c2); }

Big rellich_beta(Big a, int d) {
  Big dd = d;
  Big rad = dd * dd - 4 * dd + 16 * a * a - 16 * a + 8;
  return (-4 + 8 * a + sqrt(Big(2)) * sqrt(rad)) / 8;
}

Big rellich_constant(int k, int d) {
  Big a = Big(k) / 2;
  Big b = rellich_beta(a, d);
  Big dd = d;
  Big c1 = 2 * b * (dd - 2 * b + 2 * a - 1) / dd;
  Big c2 = b * (dd + 4 * b - 4 * a) * (dd + 2 * a - 2) * (2 * b - 2 * a + 1) / (2 * dd);
  Big num = (dd - 2 * k) * (dd - 2 * k) * (dd + 2 * k - 4) * (dd + 2 * k - 4);
  Big den = 256 * (1 + hardy_rellich_inverse(k, d) * (dd * c1 + dd * c2 * hardy_inverse(k, d)));
  return num / den;
}

Big rellich_chain(int m, int k, int d) {
  Big p = 1;
  for (int i = 0; i < m; ++i) p *= rellich_constant(k - 2 * i, d);
  return p;
}

Big hardy_chain(int m, int k, int d) {
  Big p = 1 / hardy_inverse(k, d);
  for (int i = 0; i < m; ++i) p *= rellich_constant(k - 2 * i - 1, d);
  return p;
}

DenseBoxProblem dense_box_problem(int k, int d, int radius, lattice_hardy::InequalityKind kind) {
  using namespace lattice_hardy;
  DenseBoxProblem p;
  for (const auto& n : linf_ball(d, radius)) {
    if (!n.is_zero()) p.sites.push_back(n);
  }
  const auto size = static_cast<Eigen::Index>(p.sites.size());
  const bool hardy = kind == InequalityKind::hardy;
  const int s = hardy ? 4 * k + 2 : 4 * k;

  // Image components of each basis delta, as dense maps over their supports.
  std::vector<std::vector<LatticeFunction>> images(p.sites.size());
  for (std::size_t i = 0; i < p.sites.size(); ++i) {
    LatticeFunction v = laplacian_power(delta(p.sites[i]), k);
    if (hardy) {
      for (int j = 0; j < d; ++j) images[i].push_back(backward_difference(v, j));
    } else {
      images[i].push_back(v);
    }
  }
  p.a.resize(size, size);
  p.w.resize(size);
  for (Eigen::Index i = 0; i < size; ++i) {
    const auto& si = p.sites[static_cast<std::size_t>(i)];
    p.w(i) = 1.0 / std::pow(std::sqrt(static_cast<double>(si.norm_sq())), s);
    for (Eigen::Index j = 0; j <= i; ++j) {
      double acc = 0.0;
      const auto& ci = images[static_cast<std::size_t>(i)];
      const auto& cj = images[static_cast<std::size_t>(j)];
      for (std::size_t c = 0; c < ci.size(); ++c) acc += inner_product(ci[c], cj[c]);
      p.a(i, j) = acc;
      p.a(j, i) = acc;
    }
  }
  return p;
}

double smallest_generalized_eigenvalue(const DenseBoxProblem& p) {
  Eigen::MatrixXd w = p.w.asDiagonal();
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(p.a, w, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace oracle
