#include <benchmark/benchmark.h>

#include "eqgon/rep.hpp"

using namespace eqgon;

static void BM_enumerate_reps(benchmark::State& state) {
    i64 m = state.range(0), N = state.range(1);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_reps(m, N));
    state.SetComplexityN(N);
}
BENCHMARK(BM_enumerate_reps)
    ->Args({3, 300})
    ->Args({11, 300})
    ->Args({3, 2000})
    ->Args({15015, 2000});

static void BM_unit_pool(benchmark::State& state) {
    i64 m = state.range(0), N = state.range(1);
    for (auto _ : state) benchmark::DoNotOptimize(unit_set(m, N));
}
BENCHMARK(BM_unit_pool)->Args({3, 300})->Args({11, 300})->Args({35, 10000});

static void BM_reps_of_norm(benchmark::State& state) {
    i64 m = state.range(0);
    i128 Q = (i128)state.range(1) * state.range(1);
    for (auto _ : state) benchmark::DoNotOptimize(reps_of_norm(m, Q));
}
BENCHMARK(BM_reps_of_norm)->Args({3, 196})->Args({11, 90})->Args({23, 1872});

BENCHMARK_MAIN();
