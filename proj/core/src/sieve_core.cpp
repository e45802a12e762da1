#include "primetab/sieve_core.hpp"

#include <algorithm>
#include <cassert>
#include <future>

#include "primetab/errors.hpp"
#include "primetab/util.hpp"

namespace primetab::sieve_core {

void ensure_table_budget(uint64_t n) {
    if (n / 8 + 1 > kTableByteBudget)
        throw CapacityExceeded("primality table for n=" + std::to_string(n) +
                               " exceeds the table budget");
}

// factor 2 on top of the estimate: tournament merging double-buffers
void ensure_merge_budget(uint64_t n, double values_per_n) {
    double bytes = 2.0 * values_per_n * double(n) * 8.0;
    if (bytes > double(kMergeByteBudget))
        throw CapacityExceeded("run lists for n=" + std::to_string(n) +
                               " exceed the merge budget");
}

PrimeTable eratosthenes(uint64_t n) {
    ensure_table_budget(n);
    PrimeTable table(n);
    if (n < 2) return table;

    // evens via word pattern, odd composites struck below
    for (uint64_t& w : table.bits.words()) w = 0xAAAAAAAAAAAAAAAAull;
    table.bits.clear_padding();
    table.bits.reset(1);
    table.bits.set(2);

    for (uint64_t p = 3; p * p <= n; p += 2) {
        if (!table.bits.test(p)) continue;
        for (uint64_t m = p * p; m <= n; m += 2 * p) table.bits.reset(m);
    }
    return table;
}

namespace {

// Core two-way merge; branch-light inner loop since this dominates the
// merge sieve's runtime.
void merge_into(const RunList& a, const RunList& b, RunList& out) {
    out.values.resize(a.size() + b.size());
    const uint64_t* pa = a.values.data();
    const uint64_t* ea = pa + a.size();
    const uint64_t* pb = b.values.data();
    const uint64_t* eb = pb + b.size();
    uint64_t* po = out.values.data();
    while (pa != ea && pb != eb) {
        uint64_t va = *pa;
        uint64_t vb = *pb;
        bool take_a = va <= vb;
        *po++ = take_a ? va : vb;
        pa += take_a;
        pb += !take_a;
    }
    po = std::copy(pa, ea, po);
    std::copy(pb, eb, po);
}

void merge_level_range(std::vector<RunList>& in, std::vector<RunList>& out,
                       size_t first_pair, size_t last_pair) {
    for (size_t i = first_pair; i < last_pair; ++i) {
        merge_into(in[2 * i], in[2 * i + 1], out[i]);
        in[2 * i].values = {};  // free as we go; peak memory matters here
        in[2 * i + 1].values = {};
    }
}

}  // namespace

RunList merge_runs(std::vector<RunList> runs) {
    if (runs.empty()) return RunList{};
    std::vector<RunList> next;
    while (runs.size() > 1) {
        size_t pairs = runs.size() / 2;
        next.assign((runs.size() + 1) / 2, RunList{});
        if (runs.size() & 1) next.back() = std::move(runs.back());

        unsigned workers = std::min<uint64_t>(thread_budget(), pairs);
        if (workers > 1) {
            std::vector<std::future<void>> tasks;
            size_t chunk = (pairs + workers - 1) / workers;
            for (unsigned t = 0; t < workers; ++t) {
                size_t lo = t * chunk;
                size_t hi = std::min(pairs, lo + chunk);
                if (lo >= hi) break;
                tasks.push_back(std::async(std::launch::async, merge_level_range,
                                           std::ref(runs), std::ref(next), lo, hi));
            }
            for (auto& t : tasks) t.get();
        } else {
            merge_level_range(runs, next, 0, pairs);
        }
        runs.swap(next);
    }
    return std::move(runs.front());
}

RunList odd_multiplicity(const RunList& run) {
    RunList out;
    const auto& v = run.values;
    for (size_t i = 0; i < v.size();) {
        size_t j = i + 1;
        while (j < v.size() && v[j] == v[i]) ++j;
        if ((j - i) & 1) out.values.push_back(v[i]);
        i = j;
    }
    return out;
}

PrimeTable schonhage_merge_sieve(uint64_t n) {
    assert(n >= 2);
    ensure_table_budget(n);
    // sum over primes p <= sqrt(n) of n/p values, about 2.4n for desk sizes
    ensure_merge_budget(n, 2.4);

    uint64_t root = isqrt(n);
    PrimeTable boot = eratosthenes(root);

    std::vector<RunList> lists;
    for (uint64_t p = 2; p <= root; ++p) {
        if (!boot.bits.test(p)) continue;
        RunList multiples;
        multiples.values.reserve(n / p - p + 1);
        for (uint64_t m = p * p; m <= n; m += p) multiples.values.push_back(m);
        lists.push_back(std::move(multiples));
    }
    RunList composites = merge_runs(std::move(lists));

    PrimeTable table(n);
    for (uint64_t& w : table.bits.words()) w = ~uint64_t{0};
    table.bits.clear_padding();
    table.bits.reset(0);
    table.bits.reset(1);
    for (uint64_t v : composites.values) table.bits.reset(v);
    return table;
}

}  // namespace primetab::sieve_core
