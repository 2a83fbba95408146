#include <benchmark/benchmark.h>

#include "sjlab/riemann.hpp"
#include "sjlab/spaces.hpp"

namespace {

void bm_curvature_siegel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const sjlab::MetricField field = sjlab::siegel_metric_field(n, {1.0});
  const std::vector<double> x = sjlab::siegel_to_chart(sjlab::random_siegel_point(51, n));
  for (auto _ : state) benchmark::DoNotOptimize(sjlab::curvature(field, x));
}

void bm_geodesic_shoot(benchmark::State& state) {
  const sjlab::MetricField field = sjlab::siegel_metric_field(1, {1.0});
  const std::vector<double> x0 = sjlab::siegel_to_chart(sjlab::random_siegel_point(61, 1));
  const std::vector<double> x1 = sjlab::siegel_to_chart(sjlab::random_siegel_point(62, 1));
  for (auto _ : state) benchmark::DoNotOptimize(sjlab::geodesic_shoot_bvp(field, x0, x1));
}

}  // namespace

BENCHMARK(bm_curvature_siegel)->Arg(1)->Arg(2);
BENCHMARK(bm_geodesic_shoot);
