#include <benchmark/benchmark.h>

#include "eqgon/search.hpp"

using namespace eqgon;

namespace {

search_budget budget(i64 N) {
    search_budget b;
    b.N = N;
    return b;
}

} // namespace

static void BM_symmetric_find(benchmark::State& state) {
    i64 m = state.range(0);
    int p = (int)state.range(1);
    i64 N = state.range(2);
    for (auto _ : state) benchmark::DoNotOptimize(find_zero_sum_symmetric(m, p, budget(N)));
}
BENCHMARK(BM_symmetric_find)
    ->Args({3, 3, 300})
    ->Args({11, 11, 300})
    ->Args({23, 23, 2000})
    ->Unit(benchmark::kMillisecond);

static void BM_symmetric_empty(benchmark::State& state) {
    i64 m = state.range(0);
    int p = (int)state.range(1);
    for (auto _ : state) benchmark::DoNotOptimize(find_zero_sum_symmetric(m, p, budget(300)));
}
BENCHMARK(BM_symmetric_empty)->Args({11, 9})->Args({1, 7})->Unit(benchmark::kMillisecond);

static void BM_general_find(benchmark::State& state) {
    i64 m = state.range(0);
    int n = (int)state.range(1);
    i64 N = state.range(2);
    for (auto _ : state) benchmark::DoNotOptimize(find_zero_sum_general(m, n, budget(N)));
}
BENCHMARK(BM_general_find)->Args({3, 5, 20})->Args({7, 7, 100})->Unit(benchmark::kMillisecond);

static void BM_general_empty(benchmark::State& state) {
    i64 m = state.range(0);
    int n = (int)state.range(1);
    for (auto _ : state) benchmark::DoNotOptimize(find_zero_sum_general(m, n, budget(300)));
}
BENCHMARK(BM_general_empty)->Args({11, 5})->Args({11, 7})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
