#include <benchmark/benchmark.h>

#include "primetab/numberkit.hpp"
#include "primetab/sieve_core.hpp"

using namespace primetab;

static void BM_FactorialIterative(benchmark::State& state) {
    uint64_t n = uint64_t(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(numberkit::factorial_iterative(n));
}

static void BM_FactorialNestedSquaring(benchmark::State& state) {
    uint64_t n = uint64_t(state.range(0));
    PrimeTable primes = sieve_core::eratosthenes(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(numberkit::factorial_schonhage(n, primes));
}

static void BM_FactorialHalving(benchmark::State& state) {
    uint64_t n = uint64_t(state.range(0));
    PrimeTable primes = sieve_core::eratosthenes(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(numberkit::factorial_vardi(n, primes));
}

BENCHMARK(BM_FactorialIterative)->Arg(1000)->Arg(10000)->Arg(50000);
BENCHMARK(BM_FactorialNestedSquaring)->Arg(1000)->Arg(10000)->Arg(50000);
BENCHMARK(BM_FactorialHalving)->Arg(1000)->Arg(10000)->Arg(50000);

BENCHMARK_MAIN();
