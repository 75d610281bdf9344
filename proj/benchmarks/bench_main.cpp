#include <benchmark/benchmark.h>

#include <vector>

#include "lattice_hardy/box_operator.hpp"
#include "lattice_hardy/estimator.hpp"
#include "lattice_hardy/lattice.hpp"
#include "lattice_hardy/omega_kernel.hpp"
#include "lattice_hardy/torus_integrals.hpp"
#include "lattice_hardy/torus_verify.hpp"

using namespace lattice_hardy;

static void BM_SparseLaplacian(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto u = random_lattice_function(d, 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(laplacian(u));
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(u.size()));
}
BENCHMARK(BM_SparseLaplacian)->Arg(2)->Arg(3)->Arg(4);

static void BM_BoxApply(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int power = static_cast<int>(state.range(1));
  BoxOperator op({d, 4}, power);
  std::vector<double> u(op.slots(), 1.0), out(op.slots());
  u[op.origin_slot()] = 0.0;
  for (auto _ : state) {
    op.apply(u, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(op.slots()));
}
BENCHMARK(BM_BoxApply)->Args({3, 1})->Args({5, 1})->Args({5, 2});

static void BM_WeightTable(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(WeightTable(d, -1, WeightShape::plain, 2));
}
BENCHMARK(BM_WeightTable)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_KernelIntegral(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto psi = random_trig_poly(d, 1, 7, true, true);
  cached_weight_table(d, -2, WeightShape::plain, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_integral(psi, Derivative::none(), -2, WeightShape::plain));
}
BENCHMARK(BM_KernelIntegral)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_VerifyRellich(benchmark::State& state) {
  const auto psi = random_trig_poly(5, 2, 3, true, true);
  for (auto _ : state) benchmark::DoNotOptimize(verify_weighted_rellich(psi, 0));
}
BENCHMARK(BM_VerifyRellich)->Unit(benchmark::kMillisecond);

static void BM_Estimate(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int radius = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(estimate_sharp_constant(0, d, radius, InequalityKind::hardy));
}
BENCHMARK(BM_Estimate)->Args({1, 64})->Args({3, 4})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
