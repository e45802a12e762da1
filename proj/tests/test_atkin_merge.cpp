#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "primetab/atkin_merge.hpp"
#include "primetab/sieve_core.hpp"

using namespace primetab;
using atkin_merge::ParityTable;

TEST_CASE("wheel prime lists") {
    // log2(2^20) = 20, ceil(sqrt(20)) = 5 odd primes past 3
    CHECK(atkin_merge::wheel_primes(uint64_t{1} << 20) ==
          std::vector<uint64_t>{5, 7, 11, 13, 17});
    CHECK(atkin_merge::wheel_primes(16) == std::vector<uint64_t>{5, 7});
    CHECK(!atkin_merge::wheel_primes(2).empty());
}

TEST_CASE("x^2+4y^2 parity table on known bits") {
    ParityTable table = atkin_merge::quad_parity_merge(25, 1, 4);
    CHECK(table.parity(5));    // unique pair (1,1)
    CHECK(table.parity(25));   // unique pair (3,2)
    CHECK(table.parity(8));    // unique pair (2,1)
    CHECK(table.parity(13));   // unique pair (3,1)
    CHECK(!table.parity(16));  // no pair at all
    CHECK(!table.parity(20));  // (4,1) and (2,2), even count

    ParityTable tiny = atkin_merge::quad_parity_merge(3, 1, 4);
    for (uint64_t k = 0; k <= 3; ++k) CHECK(!tiny.parity(k));
}

TEST_CASE("3x^2-y^2 parity table on known bits") {
    CHECK(atkin_merge::hyper_parity_merge(11).parity(11));  // (2,1)

    ParityTable tiny = atkin_merge::hyper_parity_merge(2);
    for (uint64_t k = 0; k <= 2; ++k) CHECK(!tiny.parity(k));

    CHECK(atkin_merge::hyper_parity_merge(50).parity(23));  // (3,2): 27-4
}

TEST_CASE("merge parity tables equal brute-force pair counts") {
    constexpr uint64_t n = 3000;
    ParityTable q14 = atkin_merge::quad_parity_merge(n, 1, 4);
    ParityTable q13 = atkin_merge::quad_parity_merge(n, 1, 3);
    ParityTable hyp = atkin_merge::hyper_parity_merge(n);
    for (uint64_t k = 1; k <= n; ++k) {
        CHECK(q14.parity(k) == (oracle::quad_pair_count(k, 4) % 2 == 1));
        CHECK(q13.parity(k) == (oracle::quad_pair_count(k, 3) % 2 == 1));
        CHECK(hyp.parity(k) == (oracle::hyper_pair_count(k) % 2 == 1));
    }
}

TEST_CASE("screened positions read zero, the rest are untouched") {
    constexpr uint64_t n = 2000;
    const std::vector<uint64_t> screens[] = {{2, 3}, {5}, {2, 3, 5, 7}};
    ParityTable plain_q14 = atkin_merge::quad_parity_merge(n, 1, 4);
    ParityTable plain_q13 = atkin_merge::quad_parity_merge(n, 1, 3);
    ParityTable plain_hyp = atkin_merge::hyper_parity_merge(n);

    for (const auto& screen : screens) {
        ParityTable q14 = atkin_merge::quad_parity_merge(n, 1, 4, screen);
        ParityTable q13 = atkin_merge::quad_parity_merge(n, 1, 3, screen);
        ParityTable hyp = atkin_merge::hyper_parity_merge(n, screen);
        for (uint64_t k = 1; k <= n; ++k) {
            bool dropped = false;
            for (uint64_t p : screen) dropped |= k % p == 0;
            CHECK(q14.parity(k) == (dropped ? false : plain_q14.parity(k)));
            CHECK(q13.parity(k) == (dropped ? false : plain_q13.parity(k)));
            CHECK(hyp.parity(k) == (dropped ? false : plain_hyp.parity(k)));
        }
    }
}

TEST_CASE("square-divisor filter on known sets") {
    Bitset bits = atkin_merge::nonsquarefree(20);
    std::vector<uint64_t> got;
    for (uint64_t k = 0; k <= 20; ++k)
        if (bits.test(k)) got.push_back(k);
    CHECK(got == std::vector<uint64_t>{4, 8, 9, 12, 16, 18, 20});

    CHECK(atkin_merge::nonsquarefree(3).count() == 0);

    Bitset larger = atkin_merge::nonsquarefree(49);
    CHECK(larger.test(49));  // 7^2
    CHECK(larger.test(45));  // 9 * 5
    CHECK(!larger.test(42));
}

TEST_CASE("square-divisor filter against per-k trial") {
    // 5000 is big enough that primes land on both sides of the phase split
    Bitset bits = atkin_merge::nonsquarefree(5000);
    for (uint64_t k = 0; k <= 5000; ++k)
        CHECK(bits.test(k) == oracle::has_square_divisor(k));
}

TEST_CASE("merge sieve variant equals eratosthenes") {
    CHECK(atkin_merge::atkin_sieve_merge(2) == sieve_core::eratosthenes(2));
    CHECK(atkin_merge::atkin_sieve_merge(30) == sieve_core::eratosthenes(30));
    CHECK(!atkin_merge::atkin_sieve_merge(25).is_prime(25));

    for (uint64_t n = 2; n <= 2000; ++n) {
        CHECK(atkin_merge::atkin_sieve_merge(n, false) == sieve_core::eratosthenes(n));
        CHECK(atkin_merge::atkin_sieve_merge(n, true) == sieve_core::eratosthenes(n));
    }
    PrimeTable reference = sieve_core::eratosthenes(100000);
    CHECK(atkin_merge::atkin_sieve_merge(100000, false) == reference);
    CHECK(atkin_merge::atkin_sieve_merge(100000, true) == reference);
}
