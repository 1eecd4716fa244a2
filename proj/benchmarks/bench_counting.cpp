#include <benchmark/benchmark.h>

#include "pellian/counting.hpp"

using namespace pellian;

static void BM_count_N(benchmark::State& state) {
    const i64 B = state.range(0);
    const auto strategy = state.range(1) == 0 ? CountStrategy::kPerD : CountStrategy::kBrute;
    for (auto _ : state) benchmark::DoNotOptimize(count_N(B, strategy));
}
BENCHMARK(BM_count_N)->Args({500, 0})->Args({500, 1})->Args({2000, 0})->Args({2000, 1});

static void BM_count_S(benchmark::State& state) {
    const i64 x = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(count_S(x, 0.5));
}
BENCHMARK(BM_count_S)->Arg(10000)->Arg(100000);

static void BM_envelope(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(lemma21_envelope(state.range(0)));
}
BENCHMARK(BM_envelope)->Arg(1000)->Arg(10000);
