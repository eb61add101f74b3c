#include <benchmark/benchmark.h>

#include "lplab/norms.hpp"

using namespace lplab;

static void SpectralNorm(benchmark::State& state) {
  Rng rng(1);
  const auto n = static_cast<Eigen::Index>(state.range(0));
  const DenseMatrix x = gaussian_matrix(n, n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(opnorm(x, 2.0).value);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(SpectralNorm)->RangeMultiplier(2)->Range(16, 256)->Complexity();

static void ColumnSumNorm(benchmark::State& state) {
  Rng rng(2);
  const auto n = static_cast<Eigen::Index>(state.range(0));
  const DenseMatrix x = gaussian_matrix(n, n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(opnorm(x, 1.0).value);
  }
}
BENCHMARK(ColumnSumNorm)->RangeMultiplier(2)->Range(16, 256);

static void TraceClassNorm(benchmark::State& state) {
  Rng rng(3);
  const auto n = static_cast<Eigen::Index>(state.range(0));
  const DenseMatrix x = gaussian_matrix(n, n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(schatten_norm(x, 1));
  }
}
BENCHMARK(TraceClassNorm)->RangeMultiplier(2)->Range(16, 128);

static void AscentEstimate(benchmark::State& state) {
  Rng rng(4);
  const DenseMatrix x = gaussian_matrix(32, 32, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(opnorm(x, 3.0).value);
  }
}
BENCHMARK(AscentEstimate);
