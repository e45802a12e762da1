#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "primetab/errors.hpp"
#include "primetab/sieve_core.hpp"
#include "primetab/util.hpp"

using namespace primetab;
using sieve_core::RunList;

namespace {

std::vector<uint64_t> primes_of(const PrimeTable& table) {
    std::vector<uint64_t> out;
    for (uint64_t k = 0; k <= table.n; ++k)
        if (table.is_prime(k)) out.push_back(k);
    return out;
}

}  // namespace

TEST_CASE("eratosthenes on small bounds") {
    CHECK(sieve_core::eratosthenes(0).count() == 0);
    CHECK(sieve_core::eratosthenes(1).count() == 0);
    CHECK(primes_of(sieve_core::eratosthenes(10)) ==
          std::vector<uint64_t>{2, 3, 5, 7});
    CHECK(sieve_core::eratosthenes(100).count() == 25);
}

TEST_CASE("eratosthenes against trial division") {
    PrimeTable table = sieve_core::eratosthenes(2000);
    for (uint64_t k = 0; k <= 2000; ++k)
        CHECK(table.is_prime(k) == oracle::trial_prime(k));
}

TEST_CASE("merge sieve equals eratosthenes") {
    CHECK(primes_of(sieve_core::schonhage_merge_sieve(2)) ==
          std::vector<uint64_t>{2});
    CHECK(primes_of(sieve_core::schonhage_merge_sieve(30)) ==
          std::vector<uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});

    for (uint64_t n = 2; n <= 512; ++n)
        CHECK(sieve_core::schonhage_merge_sieve(n) == sieve_core::eratosthenes(n));
    for (uint64_t n : {10000ull, 100000ull})
        CHECK(sieve_core::schonhage_merge_sieve(n) == sieve_core::eratosthenes(n));

    CHECK(sieve_core::schonhage_merge_sieve(1000000).count() == 78498);
}

TEST_CASE("merge_runs on fixed lists") {
    CHECK(sieve_core::merge_runs({}).values.empty());
    CHECK(sieve_core::merge_runs({RunList{}, RunList{}}).values.empty());
    CHECK(sieve_core::merge_runs({RunList{{2, 4, 6}}, RunList{{3, 6, 9}}}).values ==
          std::vector<uint64_t>{2, 3, 4, 6, 6, 9});
    CHECK(sieve_core::merge_runs({RunList{{5}}}).values == std::vector<uint64_t>{5});
}

TEST_CASE("merge_runs against sort, any list count") {
    std::mt19937_64 rng(41);
    for (int round = 0; round < 50; ++round) {
        size_t list_count = 1 + rng() % 9;
        std::vector<RunList> runs(list_count);
        std::vector<uint64_t> all;
        for (auto& run : runs) {
            size_t len = rng() % 40;
            run.values.resize(len);
            for (auto& v : run.values) v = rng() % 64;  // force duplicates
            std::sort(run.values.begin(), run.values.end());
            all.insert(all.end(), run.values.begin(), run.values.end());
        }
        std::sort(all.begin(), all.end());

        RunList merged = sieve_core::merge_runs(runs);
        CHECK(merged.values == all);
    }
}

TEST_CASE("merge_runs is unchanged by the thread budget") {
    std::mt19937_64 rng(43);
    std::vector<RunList> runs(16);
    for (auto& run : runs) {
        run.values.resize(500 + rng() % 500);
        for (auto& v : run.values) v = rng() % 10000;
        std::sort(run.values.begin(), run.values.end());
    }

    RunList serial = sieve_core::merge_runs(runs);
    set_thread_budget(4);
    RunList threaded = sieve_core::merge_runs(runs);
    set_thread_budget(1);
    CHECK(serial.values == threaded.values);
}

TEST_CASE("odd_multiplicity keeps exactly the odd-count values") {
    CHECK(sieve_core::odd_multiplicity(RunList{{5, 5, 7}}).values ==
          std::vector<uint64_t>{7});
    CHECK(sieve_core::odd_multiplicity(RunList{{1, 1, 1, 2, 3, 3}}).values ==
          std::vector<uint64_t>{1, 2});
    CHECK(sieve_core::odd_multiplicity(RunList{}).values.empty());

    std::mt19937_64 rng(47);
    for (int round = 0; round < 30; ++round) {
        RunList run;
        run.values.resize(rng() % 200);
        for (auto& v : run.values) v = rng() % 50;
        std::sort(run.values.begin(), run.values.end());

        std::map<uint64_t, uint64_t> freq;
        for (uint64_t v : run.values) ++freq[v];
        std::vector<uint64_t> want;
        for (auto [v, count] : freq)
            if (count % 2) want.push_back(v);

        CHECK(sieve_core::odd_multiplicity(run).values == want);
    }
}

TEST_CASE("budget guards refuse oversized work without allocating") {
    CHECK_THROWS_AS(sieve_core::ensure_table_budget(uint64_t{9'000'000'000}),
                    CapacityExceeded);
    CHECK_THROWS_AS(sieve_core::ensure_merge_budget(uint64_t{1'000'000'000}, 2.4),
                    CapacityExceeded);
    CHECK_NOTHROW(sieve_core::ensure_table_budget(1'000'000));
    CHECK_NOTHROW(sieve_core::ensure_merge_budget(1'000'000, 2.4));

    CHECK_THROWS_AS(sieve_core::eratosthenes(uint64_t{9'000'000'000}),
                    CapacityExceeded);
    CHECK_THROWS_AS(sieve_core::schonhage_merge_sieve(uint64_t{9'000'000'000}),
                    CapacityExceeded);
}
