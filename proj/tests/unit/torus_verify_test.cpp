#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "lattice_hardy/constants.hpp"
#include "lattice_hardy/errors.hpp"
#include "lattice_hardy/seeding.hpp"
#include "lattice_hardy/torus_verify.hpp"

using namespace lattice_hardy;

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

TrigPoly cos_x1(int d) {
  TrigPoly p(d, true);
  p.set(MultiIndex::unit(d, 0), 0.5);
  p.set(MultiIndex::unit(d, 0, -1), 0.5);
  return p;
}

}  // namespace

TEST(WeightedHardy, CosineExample) {
  auto r = verify_weighted_hardy(cos_x1(3), 0);
  EXPECT_NEAR(r.rhs_integral, std::pow(kTwoPi, 3) / 2, 1e-12 * r.rhs_integral);
  EXPECT_NEAR(r.rhs, 124.025, 1e-3);
  EXPECT_TRUE(r.holds);
  ASSERT_TRUE(r.ratio.has_value());
  EXPECT_GE(*r.ratio, 3.0 / 55.0);
  EXPECT_DOUBLE_EQ(r.constant, 3.0 / 55.0);
  EXPECT_FALSE(r.exact);
  EXPECT_EQ(r.inequality, "hardy");
}

TEST(WeightedHardy, ZeroPolynomialIsDegenerate) {
  auto r = verify_weighted_hardy(TrigPoly(3, true), 0);
  EXPECT_TRUE(r.holds);
  EXPECT_FALSE(r.ratio.has_value());
  EXPECT_EQ(r.lhs, 0.0);
  EXPECT_EQ(r.rhs, 0.0);
}

TEST(WeightedHardy, RandomBatchHolds) {
  for (int i = 0; i < 100; ++i) {
    auto psi = random_trig_poly(3, 3, derive_seed(2024, static_cast<std::uint64_t>(i)), true, true);
    auto r = verify_weighted_hardy(psi, 0);
    EXPECT_TRUE(r.holds) << i;
    EXPECT_GE(*r.ratio, r.constant) << i;
  }
}

TEST(WeightedHardy, GridRouteAgrees) {
  auto psi = random_trig_poly(3, 1, 9, true, true);
  VerifyOptions grid;
  grid.integrals.method = IntegralMethod::grid;
  grid.integrals.grid_nodes = 64;
  auto g = verify_weighted_hardy(psi, 0, grid);
  auto k = verify_weighted_hardy(psi, 0);
  EXPECT_EQ(g.method, IntegralMethod::grid);
  EXPECT_GT(g.diagnostic, 0.0);
  EXPECT_TRUE(g.holds);
  EXPECT_LT(std::abs(g.lhs_integral - k.lhs_integral) / k.lhs_integral, 1.5e-2);
  EXPECT_DOUBLE_EQ(g.rhs_integral, k.rhs_integral);
}

TEST(WeightedHardy, Preconditions) {
  EXPECT_THROW(verify_weighted_hardy(random_trig_poly(3, 1, 1, false, true), 0), PreconditionError);
  EXPECT_THROW(verify_weighted_hardy(cos_x1(4), -1), DomainError);
  EXPECT_NO_THROW(verify_weighted_hardy(cos_x1(5), -1));
}

TEST(WeightedHardy, NegativeWeightExponentHolds) {
  for (int i = 0; i < 10; ++i) {
    auto r = verify_weighted_hardy(random_trig_poly(5, 1, 300 + static_cast<unsigned>(i), true, true), -1);
    EXPECT_TRUE(r.holds);
  }
}

TEST(WeightedHardyRellich, CosineExampleAndBatch) {
  auto r = verify_weighted_hardy_rellich(cos_x1(8), 0);
  EXPECT_TRUE(r.holds);
  EXPECT_GE(*r.ratio, 16.0 / 11.0);
  EXPECT_TRUE(verify_weighted_hardy_rellich(TrigPoly(8, true), 0).holds);
  for (int i = 0; i < 5; ++i) {
    EXPECT_TRUE(verify_weighted_hardy_rellich(random_trig_poly(8, 1, 50 + static_cast<unsigned>(i), true, true), 0).holds);
  }
  EXPECT_THROW(verify_weighted_hardy_rellich(cos_x1(7), 0), DomainError);
}

TEST(WeightedRellich, CosineExampleAndBatch) {
  EXPECT_TRUE(verify_weighted_rellich(cos_x1(5), 0).holds);
  EXPECT_TRUE(verify_weighted_rellich(TrigPoly(5, true), 0).holds);
  for (int d : {5, 6}) {
    for (int i = 0; i < 5; ++i) {
      auto r = verify_weighted_rellich(random_trig_poly(d, 1, 70 + static_cast<unsigned>(i), true, true), 0);
      EXPECT_TRUE(r.holds);
      EXPECT_DOUBLE_EQ(r.constant, weighted_rellich_constant(0, d));
    }
  }
}

TEST(HigherOrder, ZeroOrderGradientIsHardy) {
  auto psi = random_trig_poly(4, 2, 5, true, true);
  auto h = verify_weighted_hardy(psi, 0);
  auto g = verify_higher_order(psi, 0, 0, HigherOrderForm::gradient);
  EXPECT_DOUBLE_EQ(g.constant, h.constant);
  EXPECT_DOUBLE_EQ(g.lhs_integral, h.lhs_integral);
  EXPECT_DOUBLE_EQ(g.rhs_integral, h.rhs_integral);
  EXPECT_EQ(g.holds, h.holds);
}

TEST(HigherOrder, Examples) {
  auto l = verify_higher_order(cos_x1(5), 1, 0, HigherOrderForm::laplacian);
  EXPECT_TRUE(l.holds);
  EXPECT_EQ(l.inequality, "higher-laplacian");
  for (int i = 0; i < 3; ++i) {
    auto g = verify_higher_order(random_trig_poly(7, 1, 90 + static_cast<unsigned>(i), true, true), 1, 0,
                                 HigherOrderForm::gradient);
    EXPECT_TRUE(g.holds);
    EXPECT_DOUBLE_EQ(g.constant, hardy_chain_constant(1, 0, 7));
  }
  EXPECT_THROW(verify_higher_order(cos_x1(6), 1, 0, HigherOrderForm::gradient), DomainError);
}

TEST(TwoParameter, TrivialParameters) {
  auto r = verify_two_parameter_inequality(random_trig_poly(6, 1, 3, true, true), 0.0, 0.0, 0.0);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.rhs, 0.0);
  EXPECT_GT(r.lhs, 0.0);
}

TEST(TwoParameter, HardyRellichStepMatchesDirectRoute) {
  // gamma = 0 and beta = -(d - 4 alpha)/8 give A = (d - 4 alpha)^2 / 16.
  const int d = 8;
  for (int i = 0; i < 3; ++i) {
    auto psi = random_trig_poly(d, 1, 500 + static_cast<unsigned>(i), true, true);
    auto t = verify_two_parameter_inequality(psi, 0.0, -d / 8.0, 0.0);
    auto hr = verify_weighted_hardy_rellich(psi, 0);
    EXPECT_TRUE(t.holds);
    EXPECT_DOUBLE_EQ(t.coeff_gradient, d * d / 16.0);
    EXPECT_EQ(t.coeff_mass, 0.0);
    EXPECT_NEAR(t.lhs, hr.rhs_integral, 1e-12 * t.lhs);
    EXPECT_NEAR(t.gradient_term, hr.lhs_integral, 1e-12 * t.gradient_term);
    // the remainder bound used to pass to the Hardy-Rellich constant
    EXPECT_GE(t.remainder, -(3.0 * d + 4) / 16.0 * t.j1 * (1 + 1e-12));
    EXPECT_NEAR(t.j1, weighted_form(psi, Derivative::grad(), 0), 1e-12 * t.j1);
  }
}

TEST(TwoParameter, RandomAdmissibleParametersHold) {
  for (int i = 0; i < 5; ++i) {
    auto psi = random_trig_poly(6, 1, 800 + static_cast<unsigned>(i), true, true);
    for (auto [b, g] : std::vector<std::pair<double, double>>{{0.5, 1.0}, {1.7, -2.0}, {-1.5, 3.0}, {-3.0, 0.0}}) {
      auto r = verify_two_parameter_inequality(psi, 0.0, b, g);
      EXPECT_TRUE(r.holds) << i << " " << b << " " << g << " lhs " << r.lhs << " rhs " << r.rhs;
    }
  }
}

TEST(TwoParameter, Preconditions) {
  auto psi = random_trig_poly(6, 1, 1, true, true);
  EXPECT_FALSE(two_parameter_admissible(0.0, -0.5));
  EXPECT_TRUE(two_parameter_admissible(0.0, -1.0));
  EXPECT_THROW(verify_two_parameter_inequality(psi, 0.0, -0.5, 0.0), DomainError);
  EXPECT_THROW(verify_two_parameter_inequality(psi, 0.25, 0.0, 0.0), DomainError);
  EXPECT_THROW(verify_two_parameter_inequality(psi, -0.25, 0.0, 0.0), ArgumentError);
  EXPECT_THROW(verify_two_parameter_inequality(random_trig_poly(4, 1, 1, true, true), 0.0, 1.0, 0.0), DomainError);
}
