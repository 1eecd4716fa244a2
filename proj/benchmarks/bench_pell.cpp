#include <benchmark/benchmark.h>

#include "pellian/pell.hpp"

using namespace pellian;

static void BM_fundamental_solution(benchmark::State& state) {
    const i64 d = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fundamental_solution(d));
    }
}
BENCHMARK(BM_fundamental_solution)->Arg(61)->Arg(1621)->Arg(94009)->Arg(999999);

static void BM_fundamental_within_small_bound(benchmark::State& state) {
    // The early-exit path used by the big enumeration sweeps.
    const i64 limit = state.range(0);
    const mpz_class bound = limit;
    for (auto _ : state) {
        u64 found = 0;
        for (i64 d = 2; d <= limit; ++d) {
            if (is_perfect_square(d)) continue;
            if (fundamental_solution_within(d, bound)) ++found;
        }
        benchmark::DoNotOptimize(found);
    }
}
BENCHMARK(BM_fundamental_within_small_bound)->Arg(1000)->Arg(10000);

static void BM_cf_expand(benchmark::State& state) {
    const i64 d = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(cf_expand_sqrt(d));
}
BENCHMARK(BM_cf_expand)->Arg(61)->Arg(1000003);
