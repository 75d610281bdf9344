#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "lattice_hardy/correspondence.hpp"
#include "lattice_hardy/errors.hpp"

using namespace lattice_hardy;

namespace {

constexpr CorrespondenceKind hardy(int k) { return {InequalityKind::hardy, k}; }
constexpr CorrespondenceKind rellich(int k) { return {InequalityKind::rellich, k}; }

}  // namespace

TEST(BuildPsi, SingleSite) {
  auto psi = build_psi(delta(MultiIndex{1, 0, 0}), hardy(0));
  ASSERT_EQ(psi.coeffs().size(), 1u);
  auto [n, c] = psi.coeffs().sorted_entries().front();
  EXPECT_EQ(n, (MultiIndex{-1, 0, 0}));
  EXPECT_NEAR(std::abs(c), std::pow(2 * std::numbers::pi, -1.5), 1e-16);
  EXPECT_TRUE(build_psi(LatticeFunction(3), hardy(1)).empty());
}

TEST(BuildPsi, SupportAndZeroAverage) {
  auto u = random_lattice_function(3, 2, 8);
  for (auto kind : {hardy(0), rellich(1)}) {
    auto psi = build_psi(u, kind);
    EXPECT_TRUE(psi.has_zero_average());
    EXPECT_EQ(psi.coeffs().size(), u.size());
    for (const auto& [n, v] : u.sorted_entries()) EXPECT_TRUE(psi.coeffs().contains(-n));
  }
  EXPECT_FALSE(build_psi(u, rellich(1)).real_valued());
  LatticeFunction even(2), odd(2);
  for (const auto& n : {MultiIndex{1, 2}, MultiIndex{-3, 1}}) {
    even.set(n, 0.7);
    even.set(-n, 0.7);
    odd.set(n, 0.7);
    odd.set(-n, -0.7);
  }
  EXPECT_TRUE(build_psi(even, rellich(1)).real_valued());
  EXPECT_TRUE(build_psi(odd, hardy(0)).real_valued());
  EXPECT_FALSE(build_psi(odd, rellich(0)).real_valued());
  EXPECT_THROW(build_psi(delta(MultiIndex{0, 0}), hardy(0)), PreconditionError);
  EXPECT_THROW(build_psi(u, hardy(-1)), DomainError);
}

TEST(BuildPsi, EvenDerivativeIsTheFourierImage) {
  // Delta^{2k} psi = (-1)^k u^ pointwise.
  auto u = random_lattice_function(2, 2, 31);
  for (int k = 0; k <= 2; ++k) {
    auto psi = build_psi(u, rellich(k));
    auto lhs = laplacian_multiplier(psi, 2 * k);
    auto image = fourier_image(u);
    for (double x0 : {-2.0, 0.3, 1.1}) {
      for (double x1 : {-0.7, 2.9}) {
        std::array<double, 2> x{x0, x1};
        Complex expect = (k % 2 == 0 ? 1.0 : -1.0) * image.evaluate(x);
        EXPECT_LT(std::abs(lhs.evaluate(x) - expect), 1e-12);
      }
    }
  }
}

TEST(NormIdentity, HandValues) {
  auto h = verify_norm_identity(delta(MultiIndex{1, 0, 0}), hardy(0));
  EXPECT_NEAR(h.lhs, 1.0, 1e-15);
  EXPECT_NEAR(h.rhs, 1.0, 1e-13);
  auto r = verify_norm_identity(delta(MultiIndex{2, 0, 0}), rellich(1));
  EXPECT_NEAR(r.lhs, 1.0 / 16, 1e-16);
  EXPECT_NEAR(r.rhs, 1.0 / 16, 1e-14);
  auto z = verify_norm_identity(LatticeFunction(2), hardy(0));
  EXPECT_EQ(z.lhs, 0.0);
  EXPECT_EQ(z.rhs, 0.0);
  EXPECT_EQ(z.rel_err, 0.0);
}

TEST(FormIdentity, HandValues) {
  auto h = verify_form_identity(delta(MultiIndex{1, 0, 0}), hardy(0));
  EXPECT_DOUBLE_EQ(h.lhs, 6.0);
  EXPECT_NEAR(h.rhs, 6.0, 1e-13);
  auto z = verify_form_identity(LatticeFunction(3), rellich(2));
  EXPECT_EQ(z.lhs, 0.0);
  EXPECT_EQ(z.rhs, 0.0);
}

TEST(Identities, RandomBatches) {
  for (int d = 1; d <= 4; ++d) {
    for (int k = 0; k <= 2; ++k) {
      for (int t = 0; t < 5; ++t) {
        auto u = random_lattice_function(d, 2, 1000 * d + 10 * k + t);
        for (auto kind : {hardy(k), rellich(k)}) {
          EXPECT_LT(verify_norm_identity(u, kind).rel_err, 1e-12);
          EXPECT_LT(verify_form_identity(u, kind).rel_err, 1e-10);
        }
      }
    }
  }
}

TEST(Identities, WeightExponents) {
  EXPECT_EQ(correspondence_weight(hardy(0)), 2);
  EXPECT_EQ(correspondence_weight(hardy(2)), 10);
  EXPECT_EQ(correspondence_weight(rellich(1)), 4);
}

TEST(SymbolIdentity, LaplacianIsFourOmega) {
  for (int d = 1; d <= 4; ++d) {
    EXPECT_LT(symbol_identity_error(random_lattice_function(d, 2, 5 + d)), 1e-14);
  }
  EXPECT_EQ(symbol_identity_error(LatticeFunction(2)), 0.0);
}

TEST(RelativeError, Conventions) {
  EXPECT_EQ(relative_error(0.0, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(relative_error(1.0, 1.5), 0.5 / 1.5);
}
