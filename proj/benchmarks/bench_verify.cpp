#include <benchmark/benchmark.h>

#include "eqgon/certificate.hpp"
#include "eqgon/corpus.hpp"
#include "eqgon/serialize.hpp"

using namespace eqgon;

namespace {

const certificate& deepest_row() {
    const auto& rows = load_corpus();
    return rows.back().cert; // the 23-gon with 14-digit coordinates
}

} // namespace

static void BM_verify(benchmark::State& state) {
    const certificate& c = deepest_row();
    for (auto _ : state) benchmark::DoNotOptimize(verify_certificate(c));
}
BENCHMARK(BM_verify);

static void BM_canonicalize(benchmark::State& state) {
    const certificate& c = deepest_row();
    for (auto _ : state) benchmark::DoNotOptimize(canonicalize(c));
}
BENCHMARK(BM_canonicalize);

static void BM_emit(benchmark::State& state) {
    const certificate& c = deepest_row();
    for (auto _ : state) benchmark::DoNotOptimize(emit_certificate(c));
}
BENCHMARK(BM_emit);

static void BM_parse_and_reverify(benchmark::State& state) {
    std::string doc = emit_certificate(deepest_row());
    for (auto _ : state) benchmark::DoNotOptimize(parse_certificate(doc));
}
BENCHMARK(BM_parse_and_reverify);

static void BM_parse_corpus_line(benchmark::State& state) {
    const auto& row = load_corpus().back();
    corpus_line cl{row.m, row.p, row.source, row.cert.vectors};
    std::string line = emit_corpus_line(cl);
    for (auto _ : state) benchmark::DoNotOptimize(parse_corpus_line(line));
}
BENCHMARK(BM_parse_corpus_line);

BENCHMARK_MAIN();
