#include <benchmark/benchmark.h>

#include "bcnoma/analytic_fading.hpp"
#include "bcnoma/analytic_ff.hpp"
#include "bcnoma/analytic_mgf.hpp"

using namespace bcnoma;

static void BM_PairProbsFadingFree(benchmark::State& state) {
  SystemConfig c = default_config();
  c.sinr_threshold_db = 5.0;
  const auto part = default_partition(c);
  for (auto _ : state) benchmark::DoNotOptimize(ff::pair_probs(c, 0.7, 0.5, part));
}
BENCHMARK(BM_PairProbsFadingFree);

static void BM_PairProbsRegionNakagami(benchmark::State& state) {
  SystemConfig c = default_config();
  c.fading = Nakagami{4.0};
  const auto part = default_partition(c);
  for (auto _ : state) benchmark::DoNotOptimize(fading::pair_probs_region(c, 0.7, 0.5, part));
}
BENCHMARK(BM_PairProbsRegionNakagami)->Unit(benchmark::kMillisecond);

static void BM_MgfOutage(benchmark::State& state) {
  SystemConfig c = default_config();
  c.subregion_count = 3;
  const auto part = default_partition(c);
  const auto lad = make_ladder({0.7, 0.5, 0.3});
  const int rank = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mgf::outage_probability(c, lad, part, rank));
}
BENCHMARK(BM_MgfOutage)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
