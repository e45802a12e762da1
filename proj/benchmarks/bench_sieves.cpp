#include <benchmark/benchmark.h>

#include "primetab/atkin_merge.hpp"
#include "primetab/atkin_mult.hpp"
#include "primetab/sieve_core.hpp"

using namespace primetab;

static void BM_Eratosthenes(benchmark::State& state) {
    uint64_t n = uint64_t(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sieve_core::eratosthenes(n));
    state.SetComplexityN(int64_t(n));
}

static void BM_MergeSieve(benchmark::State& state) {
    uint64_t n = uint64_t(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sieve_core::schonhage_merge_sieve(n));
    state.SetComplexityN(int64_t(n));
}

static void BM_AtkinMerge(benchmark::State& state) {
    uint64_t n = uint64_t(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(atkin_merge::atkin_sieve_merge(n));
    state.SetComplexityN(int64_t(n));
}

static void BM_AtkinMergeWheel(benchmark::State& state) {
    uint64_t n = uint64_t(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(atkin_merge::atkin_sieve_merge(n, true));
    state.SetComplexityN(int64_t(n));
}

static void BM_AtkinMult(benchmark::State& state) {
    uint64_t n = uint64_t(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(atkin_mult::atkin_sieve_mult(n));
    state.SetComplexityN(int64_t(n));
}

BENCHMARK(BM_Eratosthenes)->Arg(100000)->Arg(1000000)->Arg(10000000)->Complexity();
BENCHMARK(BM_MergeSieve)->Arg(100000)->Arg(1000000)->Arg(10000000)->Complexity();
BENCHMARK(BM_AtkinMerge)->Arg(100000)->Arg(1000000)->Arg(10000000)->Complexity();
BENCHMARK(BM_AtkinMergeWheel)->Arg(100000)->Arg(1000000)->Arg(10000000)->Complexity();
BENCHMARK(BM_AtkinMult)->Arg(100000)->Arg(1000000)->Complexity();

BENCHMARK_MAIN();
