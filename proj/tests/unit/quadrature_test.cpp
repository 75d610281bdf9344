#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "lattice_hardy/errors.hpp"
#include "lattice_hardy/quadrature.hpp"
#include "lattice_hardy/torus_integrals.hpp"

using namespace lattice_hardy;

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

TrigPoly cos_x1(int d) {
  TrigPoly p(d, true);
  p.set(MultiIndex::unit(d, 0), 0.5);
  p.set(MultiIndex::unit(d, 0, -1), 0.5);
  return p;
}

TrigPoly constant_one(int d) {
  TrigPoly p(d, true);
  p.set(MultiIndex(d), 1.0);
  return p;
}

}  // namespace

TEST(Quadrature, IntegralOfOmega) {
  for (int d = 1; d <= 4; ++d) {
    double exact = std::pow(kTwoPi, d) * d / 2.0;
    auto q = quadrature_form(constant_one(d), Derivative::none(), 1, {8, true});
    EXPECT_NEAR(q.value, exact, 1e-10 * exact);
    EXPECT_NEAR(kernel_integral(constant_one(d), Derivative::none(), 1, WeightShape::plain), exact, 1e-12 * exact);
    EXPECT_LT(q.diagnostic, 1e-10 * exact);
  }
}

TEST(Quadrature, ZeroPolynomial) {
  EXPECT_EQ(quadrature_form(TrigPoly(3), Derivative::none(), -1, {16, true}).value, 0.0);
  EXPECT_EQ(kernel_integral(TrigPoly(3), Derivative::grad(), -1, WeightShape::plain), 0.0);
}

TEST(Quadrature, ShapedWeightsAgreeWithKernelForNonNegativePowers) {
  auto psi = random_trig_poly(3, 2, 77, true, true);
  for (int p : {0, 1, 2}) {
    for (auto shape : {WeightShape::plain, WeightShape::sin4_sum}) {
      for (auto op : {Derivative::none(), Derivative::grad()}) {
        double k = kernel_integral(psi, op, p, shape);
        double g = grid_integral(psi, op, p, shape, {16, true});
        EXPECT_NEAR(g, k, 1e-11 * std::abs(k));
      }
    }
    double k = kernel_integral(psi, Derivative::grad(), p, WeightShape::axis_sin2);
    double g = grid_integral(psi, Derivative::grad(), p, WeightShape::axis_sin2, {16, true});
    EXPECT_NEAR(g, k, 1e-11 * std::abs(k));
  }
}

TEST(Quadrature, SingularWeightConvergesToKernelValue) {
  // cos x1 against 1/omega in d = 3: the midpoint rule converges at O(h),
  // so the kernel value is compared with the Richardson extrapolant.
  auto psi = cos_x1(3);
  double kernel = kernel_integral(psi, Derivative::none(), -1, WeightShape::plain);
  EXPECT_GT(kernel, 0.0);
  auto q = quadrature_form(psi, Derivative::none(), -1, {128, true});
  double coarse = grid_integral(psi, Derivative::none(), -1, WeightShape::plain, {64, true});
  EXPECT_NEAR(q.diagnostic, std::abs(q.value - coarse), 1e-12 * kernel);
  EXPECT_LT(std::abs(q.value - kernel) / kernel, 1e-2);
  EXPECT_LT(std::abs(2 * q.value - coarse - kernel) / kernel, 1e-5);
}

TEST(Quadrature, ShapedSingularWeightConverges) {
  auto psi = random_trig_poly(3, 1, 3, true, true);
  double kernel = kernel_integral(psi, Derivative::grad(), -2, WeightShape::sin4_sum);
  double fine = grid_integral(psi, Derivative::grad(), -2, WeightShape::sin4_sum, {128, true});
  double coarse = grid_integral(psi, Derivative::grad(), -2, WeightShape::sin4_sum, {64, true});
  EXPECT_LT(std::abs(2 * fine - coarse - kernel) / kernel, 1e-4);
  double axis = kernel_integral(psi, Derivative::grad(), -1, WeightShape::axis_sin2);
  double axis_grid = grid_integral(psi, Derivative::grad(), -1, WeightShape::axis_sin2, {128, true});
  EXPECT_LT(std::abs(axis_grid - axis) / axis, 1e-6);
}

TEST(Quadrature, Preconditions) {
  auto psi = cos_x1(3);
  EXPECT_THROW(quadrature_form(psi, Derivative::none(), -1, {6, true}), ArgumentError);
  EXPECT_THROW(quadrature_form(psi, Derivative::none(), -1, {9, true}), ArgumentError);
  EXPECT_THROW(quadrature_form(psi, Derivative::none(), -1, {16, false}), ArgumentError);
  EXPECT_THROW(quadrature_form(psi, Derivative::none(), -1, {64, true}, WeightShape::plain, 1000), ResourceError);
  EXPECT_THROW(grid_integral(psi, Derivative::none(), 0, WeightShape::axis_sin2, {8, true}), ArgumentError);
}

TEST(TorusIntegral, Dispatch) {
  auto psi = random_trig_poly(3, 2, 4, true, true);
  auto exact = torus_integral(psi, Derivative::grad(), 1, WeightShape::plain, {});
  EXPECT_TRUE(exact.exact);
  EXPECT_DOUBLE_EQ(exact.value, weighted_form(psi, Derivative::grad(), 1));

  auto k = torus_integral(psi, Derivative::none(), -1, WeightShape::plain, {});
  EXPECT_FALSE(k.exact);
  EXPECT_EQ(k.diagnostic, 0.0);
  IntegralOptions grid{IntegralMethod::grid, 64, kDefaultNodeBudget};
  auto g = torus_integral(psi, Derivative::none(), -1, WeightShape::plain, grid);
  EXPECT_GT(g.diagnostic, 0.0);
  EXPECT_LT(std::abs(g.value - k.value) / k.value, 1e-2);

  EXPECT_THROW(torus_integral(psi, Derivative::none(), -2, WeightShape::plain, {}), DomainError);
  EXPECT_EQ(default_grid_nodes(4), 64);
  EXPECT_EQ(default_grid_nodes(5), 16);
  EXPECT_EQ(parse_integral_method("grid"), IntegralMethod::grid);
  EXPECT_THROW(parse_integral_method("mc"), ArgumentError);
}
