#include <benchmark/benchmark.h>

#include <random>
#include <utility>
#include <vector>

#include "primetab/packmul.hpp"

using namespace primetab;
using arith::BigNat;

namespace {

std::vector<std::pair<BigNat, BigNat>> make_pairs(size_t count, uint64_t bits,
                                                  uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<BigNat, BigNat>> pairs;
    pairs.reserve(count);
    for (size_t t = 0; t < count; ++t) {
        auto draw = [&] {
            std::vector<uint64_t> limbs((bits + 63) / 64);
            for (auto& limb : limbs) limb = rng();
            if (bits % 64) limbs.back() &= (uint64_t{1} << (bits % 64)) - 1;
            return BigNat::from_limbs(std::move(limbs));
        };
        pairs.emplace_back(draw(), draw());
    }
    return pairs;
}

}  // namespace

static void BM_PackedBatch(benchmark::State& state) {
    size_t count = size_t(state.range(0));
    uint64_t bits = uint64_t(state.range(1));
    auto pairs = make_pairs(count, bits, 99);
    for (auto _ : state)
        benchmark::DoNotOptimize(packmul::pack_and_multiply(pairs, bits));
}

static void BM_PerPairLoop(benchmark::State& state) {
    size_t count = size_t(state.range(0));
    uint64_t bits = uint64_t(state.range(1));
    auto pairs = make_pairs(count, bits, 99);
    for (auto _ : state) {
        std::vector<BigNat> products;
        products.reserve(count);
        for (const auto& [u, v] : pairs) products.push_back(arith::mul(u, v));
        benchmark::DoNotOptimize(products);
    }
}

BENCHMARK(BM_PackedBatch)
    ->Args({16, 256})
    ->Args({64, 256})
    ->Args({64, 1024})
    ->Args({256, 1024});
BENCHMARK(BM_PerPairLoop)
    ->Args({16, 256})
    ->Args({64, 256})
    ->Args({64, 1024})
    ->Args({256, 1024});

BENCHMARK_MAIN();
