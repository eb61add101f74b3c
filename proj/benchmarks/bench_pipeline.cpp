#include <benchmark/benchmark.h>

#include "lplab/pipeline.hpp"

using namespace lplab;

static void SquareRootMap(benchmark::State& state) {
  Rng rng(5);
  const auto n = static_cast<Eigen::Index>(state.range(0));
  DenseMatrix s = gaussian_matrix(n, n, rng);
  s /= schatten_norm(s, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nc_mazur(s));
  }
}
BENCHMARK(SquareRootMap)->Arg(7)->Arg(13)->Arg(32);

static void SliceMassExact(benchmark::State& state) {
  TensorDecomposition t = exact_diagonal(7);
  t.primes = {2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(slice_mass(t, 2));
  }
  state.SetLabel("49 pairs, 7 columns");
}
BENCHMARK(SliceMassExact)->Unit(benchmark::kMillisecond);

static void FullPipelineExact(benchmark::State& state) {
  TensorDecomposition t = exact_diagonal(7);
  t.primes = {2};
  Rng rng(6);
  ModulusConfig mc;
  mc.dim = 7;
  mc.samples = 400;
  const ModulusOfContinuity fwd = estimate_modulus(MapKind::NcMazur, mc, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_pipeline(t, fwd));
  }
}
BENCHMARK(FullPipelineExact)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  ::benchmark::Initialize(&argc, argv);
  if (::benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  ::benchmark::RunSpecifiedBenchmarks();
  ::benchmark::Shutdown();
  return 0;
}
