#include <benchmark/benchmark.h>

#include <cmath>

#include "dirac1d/overlap.hpp"
#include "dirac1d/step.hpp"
#include "dirac1d/transfer.hpp"

using namespace dirac1d;

namespace {

void BM_StepScatterKlein(benchmark::State& state) {
  double E = 1.2;
  for (auto _ : state) {
    E = 1.2 + std::fmod(E, 5.0) * 1e-6;
    benchmark::DoNotOptimize(step_scatter(E, 8.0, 1.0));
  }
}
BENCHMARK(BM_StepScatterKlein);

void BM_MatchOracle(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(match_oracle(1.5, 8.0, 1.0));
  }
}
BENCHMARK(BM_MatchOracle);

void BM_BarrierScatter(benchmark::State& state) {
  const BarrierSpec spec{5.5, 2.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(barrier_scatter(spec, 3.0, 1.0));
  }
}
BENCHMARK(BM_BarrierScatter);

void BM_ComposeProfile(benchmark::State& state) {
  PotentialProfile profile{0.0, {}, 0.0};
  for (int i = 0; i < state.range(0); ++i)
    profile.segments.push_back({0.4, i % 2 ? 3.5 : -1.5});
  for (auto _ : state) {
    benchmark::DoNotOptimize(profile_scatter(profile, 2.7, 1.0));
  }
}
BENCHMARK(BM_ComposeProfile)->Arg(2)->Arg(10)->Arg(50);

void BM_DirectProfileSolve(benchmark::State& state) {
  PotentialProfile profile{0.0, {}, 0.0};
  for (int i = 0; i < state.range(0); ++i)
    profile.segments.push_back({0.4, i % 2 ? 3.5 : -1.5});
  for (auto _ : state) {
    benchmark::DoNotOptimize(direct_profile_solve(profile, 2.7, 1.0));
  }
}
BENCHMARK(BM_DirectProfileSolve)->Arg(2)->Arg(10);

void BM_OverlapQuadrature(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(n3_per_length(5.5, 1.0, 1e-10));
  }
}
BENCHMARK(BM_OverlapQuadrature);

void BM_Case2MatrixElement(benchmark::State& state) {
  const FiniteLConfig cfg;
  const double kp = grid_momentum(200, cfg.L);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        finite_l_matrix_element_case2(kp, kp, cfg, 1.0, 1.0));
  }
}
BENCHMARK(BM_Case2MatrixElement);

void BM_EvanescentOverlapSum(benchmark::State& state) {
  FiniteLConfig cfg;
  cfg.L = 500.0;
  const double k = grid_momentum(60, cfg.L);
  const double E = std::hypot(1.0, k);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evanescent_overlap_scaling(cfg, 1.0, 1.0, E));
  }
}
BENCHMARK(BM_EvanescentOverlapSum);

}  // namespace

BENCHMARK_MAIN();
