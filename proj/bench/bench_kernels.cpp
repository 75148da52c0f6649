// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS set to compare
// thread counts, e.g.  OMP_NUM_THREADS=4 ./bench_kernels

#include <benchmark/benchmark.h>

#include <random>

#include "nlc/kernels.hpp"
#include "nlc/measure.hpp"

namespace {

using nlc::kernels::Exec;

std::vector<nlc::Region> oracle_regions() {
  return {nlc::RadialRegion::annulus(0.3, 0.7), nlc::RadialRegion::annulus(0.0, 1.0),
          nlc::vertical_strip(0.0, 1.0), nlc::quadrant_below({1.0, 1.0}), nlc::halfplane_left(0.0)};
}

std::vector<std::pair<nlc::Complex, nlc::Complex>> random_pairs(std::size_t n) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<std::pair<nlc::Complex, nlc::Complex>> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(nlc::Complex{u(rng), u(rng)}, nlc::Complex{u(rng), u(rng)});
  return out;
}

template <Exec E>
void BM_MonteCarloMasses(benchmark::State& state) {
  const auto regions = oracle_regions();
  const auto samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nlc::kernels::mc_masses(regions, samples, 42, E));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <Exec E>
void BM_AnnulusSweep(benchmark::State& state) {
  std::vector<std::pair<double, double>> radii;
  for (int i = 0; i < state.range(0); ++i) radii.emplace_back(0.001 * i, 0.002 * i);
  for (auto _ : state) benchmark::DoNotOptimize(nlc::kernels::annulus_sweep(radii, E));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <Exec E>
void BM_SymdiffSweep(benchmark::State& state) {
  const auto pairs = random_pairs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nlc::kernels::quadrant_symdiff_sweep(pairs, E));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_MonteCarloMasses<Exec::Serial>)->Arg(1 << 18)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarloMasses<Exec::Parallel>)->Arg(1 << 18)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AnnulusSweep<Exec::Serial>)->Arg(10000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_AnnulusSweep<Exec::Parallel>)->Arg(10000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SymdiffSweep<Exec::Serial>)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SymdiffSweep<Exec::Parallel>)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
