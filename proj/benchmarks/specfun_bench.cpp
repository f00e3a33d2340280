#include <benchmark/benchmark.h>

#include "bcnoma/analytic_fading.hpp"
#include "bcnoma/specfun.hpp"

using namespace bcnoma;

static void BM_Hyp2f1Series(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gauss_2f1(1.0, 0.4, 1.4, -0.5));
}
BENCHMARK(BM_Hyp2f1Series);

static void BM_Hyp2f1Continuation(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gauss_2f1(1.0, 0.4, 1.4, -3.7e6));
}
BENCHMARK(BM_Hyp2f1Continuation);

static void BM_GammaGenIncompleteComplex(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(gamma_gen_incomplete(-0.4, Complex(0.3, 0.2), Complex(5.0, 3.3)));
}
BENCHMARK(BM_GammaGenIncompleteComplex);

static void BM_CompositeCdf(benchmark::State& state) {
  const fading::CompositeDist d{4.0, 1.0, 65.0, 2.5};
  double x = 1e-9;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fading::composite_cdf(d, x));
    x = x < 1e-3 ? x * 1.7 : 1e-12;
  }
}
BENCHMARK(BM_CompositeCdf);
