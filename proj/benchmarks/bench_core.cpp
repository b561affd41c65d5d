#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "hyperbolica/partition.hpp"
#include "hyperbolica/summation.hpp"
#include "hyperbolica/variation.hpp"

using namespace hyperbolica;

namespace {

std::vector<double> random_values(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  std::vector<double> values(n);
  for (double& v : values) v = value(rng);
  return values;
}

void BM_ExactSum(benchmark::State& state) {
  const auto values = random_values(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_sum(values));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ExactSum)->Range(64, 1 << 16);

void BM_TelescopedLengths(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const HInterval unit(Hyperbolic::zero(), Hyperbolic::one());
  const StrongPartition p = uniform_partition(unit, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(p.telescoped_lengths());
  }
}
BENCHMARK(BM_TelescopedLengths)->Range(8, 1 << 14);

void BM_MergeRealPartitions(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<double> p(n), q(n);
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = static_cast<double>(i) / (n - 1);
    q[i] = p[i] * p[i];
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(merge_real_partitions(p, q, MergeMode::diagonal));
  }
}
BENCHMARK(BM_MergeRealPartitions)->Range(8, 1 << 12);

void BM_BruteForceSumSet(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const HInterval unit(Hyperbolic::zero(), Hyperbolic::one());
  const auto f = NaturalFunction::parse("sin(x)", "y^2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(variation_sum_set_bruteforce(f, unit, n, n));
  }
}
BENCHMARK(BM_BruteForceSumSet)->DenseRange(2, 5);

}  // namespace
