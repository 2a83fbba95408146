#include <benchmark/benchmark.h>

#include "sjlab/siegel.hpp"

namespace {

void bm_distance(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const sjlab::SiegelPoint p0 = sjlab::random_siegel_point(11, n);
  const sjlab::SiegelPoint p1 = sjlab::random_siegel_point(12, n);
  for (auto _ : state) benchmark::DoNotOptimize(sjlab::siegel_distance(p0, p1));
}

void bm_cross_ratio(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const sjlab::SiegelPoint p0 = sjlab::random_siegel_point(21, n);
  const sjlab::SiegelPoint p1 = sjlab::random_siegel_point(22, n);
  for (auto _ : state) benchmark::DoNotOptimize(sjlab::cross_ratio(p0, p1));
}

}  // namespace

BENCHMARK(bm_distance)->Arg(1)->Arg(2)->Arg(3);
BENCHMARK(bm_cross_ratio)->Arg(1)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
