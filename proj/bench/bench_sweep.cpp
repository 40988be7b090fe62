// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "frobwedge/local_model.hpp"
#include "frobwedge/sweep.hpp"

using namespace frobwedge;

static void BM_SweepSerial(benchmark::State& state) {
  const SweepBounds b{13, 4, static_cast<std::uint64_t>(state.range(0)), 6, 20};
  for (auto _ : state) benchmark::DoNotOptimize(theorem_sweep_serial(b));
}
BENCHMARK(BM_SweepSerial)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_SweepParallel(benchmark::State& state) {
  const SweepBounds b{13, 4, static_cast<std::uint64_t>(state.range(0)), 6, 20};
  for (auto _ : state) benchmark::DoNotOptimize(theorem_sweep(b));
}
BENCHMARK(BM_SweepParallel)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_WedgeKernel(benchmark::State& state) {
  const Exec exec = state.range(1) ? Exec::parallel : Exec::serial;
  const PrimeChar p(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(local::wedge_kernel_check(p, 3, 2, exec));
}
BENCHMARK(BM_WedgeKernel)->Args({5, 0})->Args({5, 1})->Args({7, 0})->Args({7, 1})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
