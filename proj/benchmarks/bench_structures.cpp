#include <benchmark/benchmark.h>

#include "lplab/group.hpp"
#include "lplab/representation.hpp"
#include "lplab/spectral.hpp"

using namespace lplab;

static void PlaneBuild(benchmark::State& state) {
  const auto l = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ProjectivePlane::build(l));
  }
}
BENCHMARK(PlaneBuild)->Arg(2)->Arg(5)->Arg(13);

static void QuotientClosure(benchmark::State& state) {
  const auto l = static_cast<std::uint32_t>(state.range(0));
  const GeneratorSet gens = GeneratorSet::elementary_sl3();
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_quotient(l, gens));
  }
}
BENCHMARK(QuotientClosure)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void CayleySpectrum(benchmark::State& state) {
  const ClosureResult closure = enumerate_quotient(2, GeneratorSet::elementary_sl3());
  const Graph g = cayley_graph(closure.elements, GeneratorSet::elementary_sl3().reduce(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectral_report(g));
  }
  state.SetLabel("168 vertices");
}
BENCHMARK(CayleySpectrum)->Unit(benchmark::kMillisecond);

static void PairAveragingGap(benchmark::State& state) {
  const auto l = static_cast<std::uint32_t>(state.range(0));
  const ProjectivePlane plane = ProjectivePlane::build(l);
  const auto gens = pair_rep(plane, GeneratorSet::elementary_sl3());
  for (auto _ : state) {
    benchmark::DoNotOptimize(kazhdan_constant(gens));
  }
}
BENCHMARK(PairAveragingGap)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
