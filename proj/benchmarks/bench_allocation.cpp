#include <benchmark/benchmark.h>

#include "csd/allocator.hpp"
#include "csd/scenario.hpp"

namespace {

csd::SimConfig config_for(int pairs, double tau_n_db) {
  csd::SimConfig config;
  config.num_pairs = pairs;
  config.tau_n_db = tau_n_db;
  return config;
}

void BM_generate_drop(benchmark::State& state) {
  const csd::SimConfig config = config_for(static_cast<int>(state.range(0)), 0.0);
  int drop = 0;
  for (auto _ : state) benchmark::DoNotOptimize(csd::generate_drop(config, drop++));
}

void BM_run_csd(benchmark::State& state) {
  const csd::SimConfig config =
      config_for(static_cast<int>(state.range(0)), static_cast<double>(state.range(1)));
  const csd::Scenario s = csd::generate_drop(config, 0);
  for (auto _ : state) benchmark::DoNotOptimize(csd::run_csd(s, config));
}

void BM_run_max_sd(benchmark::State& state) {
  const csd::SimConfig config =
      config_for(static_cast<int>(state.range(0)), static_cast<double>(state.range(1)));
  const csd::Scenario s = csd::generate_drop(config, 0);
  for (auto _ : state) benchmark::DoNotOptimize(csd::run_max_sd(s, config));
}

}  // namespace

BENCHMARK(BM_generate_drop)->Arg(25)->Arg(75)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_run_csd)->ArgsProduct({{25, 75}, {-30, -8, 0}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_run_max_sd)->ArgsProduct({{25, 75}, {-30, -8, 0}})->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
