// Parallel sweep vs. the serial reference, plus the per-trial kernels.

#include <benchmark/benchmark.h>

#include "udn/experiment.hpp"
#include "udn/validate.hpp"

namespace {

udn::ExperimentConfig bench_config(std::size_t trials) {
  udn::ExperimentConfig c;
  c.n_values = {20, 60, 100};
  c.trials_per_point = trials;
  return c;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto c = bench_config(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(udn::run_sweep_serial(c));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 9);
}
BENCHMARK(BM_SweepSerial)->Arg(20)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_SweepParallel(benchmark::State& state) {
  const auto c = bench_config(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(udn::run_sweep(c));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 9);
}
BENCHMARK(BM_SweepParallel)->Arg(20)->Arg(80)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_DenseTrial(benchmark::State& state) {
  const udn::ExperimentConfig c;
  const auto n = static_cast<std::size_t>(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(udn::run_trial(c, 100.0, n, i++));
}
BENCHMARK(BM_DenseTrial)->Arg(100)->Arg(400)->Arg(1200)->Unit(benchmark::kMillisecond);

void BM_Validation(benchmark::State& state) {
  udn::ValidationOptions opt;
  opt.seeds = 20;
  for (auto _ : state) benchmark::DoNotOptimize(udn::run_validation(opt));
}
BENCHMARK(BM_Validation)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
