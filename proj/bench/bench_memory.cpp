#include <benchmark/benchmark.h>
#include <omp.h>

#include "itc/harness.hpp"

using namespace itc;

namespace {

ExperimentConfig bench_config(std::size_t trials) {
    ExperimentConfig cfg;
    cfg.trials = trials;
    cfg.rounds = 4;
    cfg.seed = 11;
    return cfg;
}

void BM_MemorySerial(benchmark::State& state) {
    const MemoryExperiment exp(bench_config(64), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(exp.run(0.01, 0.01, true));
    state.SetItemsProcessed(state.iterations() * 64);
}

void BM_MemoryParallel(benchmark::State& state) {
    const MemoryExperiment exp(bench_config(64), static_cast<int>(state.range(0)));
    state.counters["threads"] = omp_get_max_threads();
    for (auto _ : state) benchmark::DoNotOptimize(exp.run(0.01, 0.01, false));
    state.SetItemsProcessed(state.iterations() * 64);
}

}  // namespace

BENCHMARK(BM_MemorySerial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MemoryParallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
