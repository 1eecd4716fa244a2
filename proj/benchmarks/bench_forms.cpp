#include <benchmark/benchmark.h>

#include "pellian/forms.hpp"

using namespace pellian;

static void BM_class_number(benchmark::State& state) {
    const i64 d = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(class_number(d, false));
}
BENCHMARK(BM_class_number)->Arg(1999)->Arg(99991)->Arg(4000003);

static void BM_L_value(benchmark::State& state) {
    const i64 d = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(L_value(d, 1e-5));
}
BENCHMARK(BM_L_value)->Arg(1999)->Arg(99991);

static void BM_reduced_forms(benchmark::State& state) {
    const i64 d = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(reduced_forms(d));
}
BENCHMARK(BM_reduced_forms)->Arg(1999)->Arg(99991);
