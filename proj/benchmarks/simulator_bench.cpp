#include <benchmark/benchmark.h>

#include "bcnoma/simulator.hpp"

using namespace bcnoma;

static void BM_FullSlotTrials(benchmark::State& state) {
  SystemConfig c = default_config();
  if (state.range(0)) c.fading = Nakagami{4.0};
  const auto part = default_partition(c);
  const auto lad = make_ladder({0.7, 0.5});
  sim::RunOptions opt{1, nullptr};
  const long long trials = 20000;
  for (auto _ : state)
    benchmark::DoNotOptimize(sim::estimate_metrics(c, sim::RegionDivision{part}, lad, trials, 1, {}, opt));
  state.SetItemsProcessed(state.iterations() * trials);
}
BENCHMARK(BM_FullSlotTrials)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_SicDecode(benchmark::State& state) {
  std::vector<double> p{3e-9, 1e-9, 4e-10, 2e-11, 9e-12};
  for (auto _ : state) benchmark::DoNotOptimize(sim::sic_decode(p, 1e-13, 3.16));
}
BENCHMARK(BM_SicDecode);
