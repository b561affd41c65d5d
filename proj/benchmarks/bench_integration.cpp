#include "benchmark/benchmark.h"
#include "hyperbolica/integration.hpp"
#include "hyperbolica/variation.hpp"

using namespace hyperbolica;

namespace {

const HInterval kUnit(Hyperbolic::zero(), Hyperbolic::one());

void BM_RiemannIntegral(benchmark::State& state) {
  const auto f = NaturalFunction::parse("x^2", "sin(y)");
  const double tol = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(riemann_integral(f, kUnit, tol));
  }
}
BENCHMARK(BM_RiemannIntegral)->RangeMultiplier(100)->Range(1000, 100000000);

void BM_StieltjesIntegral(benchmark::State& state) {
  const auto f = NaturalFunction::identity();
  const auto g = NaturalFunction::parse("x^2", "y^2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        rs_integral(f, g, kUnit, 1e-7, TagRule::midpoint, SumMode::signed_increment));
  }
}
BENCHMARK(BM_StieltjesIntegral);

void BM_TotalVariation(benchmark::State& state) {
  const auto f = NaturalFunction::parse("sin(3*x) + H(x-1/2)", "y^2 - y");
  for (auto _ : state) {
    benchmark::DoNotOptimize(total_variation(f, kUnit, 1e-9, 20));
  }
}
BENCHMARK(BM_TotalVariation);

void BM_RsSumOnPartition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = NaturalFunction::parse("x^2", "sin(y)");
  const auto g = NaturalFunction::identity();
  const StrongPartition p = uniform_partition(kUnit, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        rs_sum(f, g, p, TagRule::midpoint, SumMode::signed_increment));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_RsSumOnPartition)->Range(64, 1 << 14);

}  // namespace

BENCHMARK_MAIN();
