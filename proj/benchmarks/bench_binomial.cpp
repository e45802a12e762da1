#include <benchmark/benchmark.h>

#include "primetab/numberkit.hpp"
#include "primetab/sieve_core.hpp"

using namespace primetab;

static void BM_BinomialCentral(benchmark::State& state) {
    uint64_t n = uint64_t(state.range(0));
    PrimeTable primes = sieve_core::eratosthenes(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(numberkit::binomial(n, n / 2, primes));
}

static void BM_BinomialFactorizationOnly(benchmark::State& state) {
    uint64_t n = uint64_t(state.range(0));
    PrimeTable primes = sieve_core::eratosthenes(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(numberkit::binomial_factorization(n, n / 2, primes));
}

BENCHMARK(BM_BinomialCentral)->Arg(1000)->Arg(10000)->Arg(100000);
BENCHMARK(BM_BinomialFactorizationOnly)->Arg(1000)->Arg(10000)->Arg(100000);

BENCHMARK_MAIN();
