#include <benchmark/benchmark.h>

#include "sjlab/jacobi.hpp"

namespace {

void bm_siegel_laplacian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const sjlab::SiegelPoint p = sjlab::random_siegel_point(31, n);
  const sjlab::SiegelField f = [](const sjlab::SiegelPoint& q) {
    return q.y().trace();
  };
  const sjlab::SiegelMetricParams par{1.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(sjlab::siegel_laplacian_apply(f, p, par));
}

void bm_jacobi_laplacian(benchmark::State& state) {
  const sjlab::SiegelJacobiPoint p = sjlab::random_jacobi_point(41, 1, 1);
  const sjlab::JacobiField f = [](const sjlab::SiegelJacobiPoint& q) {
    const double v = q.v()(0, 0);
    return v * v;
  };
  const sjlab::JacobiMetricParams par{1.0, 1.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(sjlab::jacobi_laplacian_apply(f, p, par));
}

}  // namespace

BENCHMARK(bm_siegel_laplacian)->Arg(1)->Arg(2);
BENCHMARK(bm_jacobi_laplacian);
