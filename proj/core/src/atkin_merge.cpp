#include "primetab/atkin_merge.hpp"

#include <cassert>
#include <cmath>

#include "primetab/errors.hpp"
#include "primetab/util.hpp"

namespace primetab::atkin_merge {

using sieve_core::RunList;

std::vector<uint64_t> wheel_primes(uint64_t n) {
    assert(n >= 2);
    size_t count =
        size_t(std::ceil(std::sqrt(std::log2(double(n)))));
    std::vector<uint64_t> out;
    PrimeTable small = sieve_core::eratosthenes(300);  // plenty for u64 n
    for (uint64_t p = 5; out.size() < count && p <= small.n; ++p)
        if (small.bits.test(p)) out.push_back(p);
    assert(out.size() == count);
    return out;
}

namespace {

struct Screen {
    bool two = false;
    bool three = false;
    std::vector<uint64_t> rest;  // odd primes > 3, divisibility-tested

    explicit Screen(std::span<const uint64_t> primes) {
        for (uint64_t q : primes) {
            if (q == 2)
                two = true;
            else if (q == 3)
                three = true;
            else
                rest.push_back(q);
        }
    }

    bool keeps(uint64_t v) const {
        for (uint64_t q : rest)
            if (v % q == 0) return false;
        return true;
    }
};

ParityTable fold_odd_counts(uint64_t n, std::vector<RunList> lists) {
    RunList merged = sieve_core::merge_runs(std::move(lists));
    RunList odd = sieve_core::odd_multiplicity(merged);
    ParityTable table(n);
    for (uint64_t v : odd.values) table.bits.set(v);
    return table;
}

// x^2 + 4y^2. Value parity equals x's parity; divisibility by 3 needs
// 3 | x and 3 | y. The screen rules below come from those two facts.
std::vector<RunList> form4_lists(uint64_t n, const Screen& screen) {
    std::vector<RunList> lists;
    uint64_t xstep = screen.two ? 2 : 1;
    for (uint64_t x = 1; x * x + 4 <= n; x += xstep) {
        uint64_t x2 = x * x;
        bool skip_y3 = screen.three && x % 3 == 0;
        RunList run;
        run.values.reserve(isqrt((n - x2) / 4) + 1);
        for (uint64_t y = 1;; ++y) {
            uint64_t v = x2 + 4 * y * y;
            if (v > n) break;
            if (skip_y3 && y % 3 == 0) continue;
            if (!screen.keeps(v)) continue;
            run.values.push_back(v);
        }
        if (!run.empty()) lists.push_back(std::move(run));
    }
    return lists;
}

// x^2 + 3y^2. Value is x^2 mod 3, so 3 | x kills the whole column;
// parity is x + y, so the screen pins y to the opposite parity of x.
std::vector<RunList> form3_lists(uint64_t n, const Screen& screen) {
    std::vector<RunList> lists;
    for (uint64_t x = 1; x * x + 3 <= n; ++x) {
        if (screen.three && x % 3 == 0) continue;
        uint64_t x2 = x * x;
        uint64_t y0 = 1, ystep = 1;
        if (screen.two) {
            y0 = (x & 1) ? 2 : 1;
            ystep = 2;
        }
        RunList run;
        run.values.reserve(isqrt((n - x2) / 3) / ystep + 1);
        for (uint64_t y = y0;; y += ystep) {
            uint64_t v = x2 + 3 * y * y;
            if (v > n) break;
            if (!screen.keeps(v)) continue;
            run.values.push_back(v);
        }
        if (!run.empty()) lists.push_back(std::move(run));
    }
    return lists;
}

// 3x^2 - y^2 with x > y > 0; y walks downward so values come out ascending.
// Parity is x + y again; divisibility by 3 needs 3 | y.
std::vector<RunList> hyper_lists(uint64_t n, const Screen& screen) {
    std::vector<RunList> lists;
    for (uint64_t x = 2; 2 * x * x + 2 * x - 1 <= n; ++x) {
        uint64_t triple = 3 * x * x;
        uint64_t ymin = triple > n ? ceil_sqrt(triple - n) : 1;
        uint64_t ystep = screen.two ? 2 : 1;  // x-1 already has opposite parity
        RunList run;
        run.values.reserve((x - ymin) / ystep + 1);
        uint64_t y = x - 1;
        while (y >= ymin) {
            uint64_t v = triple - y * y;
            if (!(screen.three && y % 3 == 0) && screen.keeps(v))
                run.values.push_back(v);
            if (y < ymin + ystep) break;
            y -= ystep;
        }
        if (!run.empty()) lists.push_back(std::move(run));
    }
    return lists;
}

}  // namespace

ParityTable quad_parity_merge(uint64_t n, unsigned a, unsigned b,
                              std::span<const uint64_t> screen_primes) {
    assert(a == 1 && (b == 3 || b == 4));
    (void)a;
    sieve_core::ensure_table_budget(n);
    Screen screen(screen_primes);
    auto lists = b == 4 ? form4_lists(n, screen) : form3_lists(n, screen);
    return fold_odd_counts(n, std::move(lists));
}

ParityTable hyper_parity_merge(uint64_t n, std::span<const uint64_t> screen_primes) {
    sieve_core::ensure_table_budget(n);
    Screen screen(screen_primes);
    return fold_odd_counts(n, hyper_lists(n, screen));
}

Bitset nonsquarefree(uint64_t n) {
    sieve_core::ensure_table_budget(n);
    Bitset marked(n + 1);
    uint64_t root = isqrt(n);
    if (root < 2) return marked;

    PrimeTable boot = sieve_core::eratosthenes(root);
    uint64_t threshold = std::max<uint64_t>(8, ceil_log2(n));

    // small primes: direct strided strikes (few distinct strides, each long)
    for (uint64_t p = 2; p < threshold && p <= root; ++p) {
        if (!boot.bits.test(p)) continue;
        uint64_t step = p * p;
        for (uint64_t m = step; m <= n; m += step) marked.set(m);
    }
    // large primes: multiples of p^2 are sparse, so collect and merge
    std::vector<RunList> lists;
    for (uint64_t p = threshold; p <= root; ++p) {
        if (!boot.bits.test(p)) continue;
        uint64_t step = p * p;
        RunList run;
        run.values.reserve(n / step + 1);
        for (uint64_t m = step; m <= n; m += step) run.values.push_back(m);
        lists.push_back(std::move(run));
    }
    RunList merged = sieve_core::merge_runs(std::move(lists));
    for (uint64_t v : merged.values) marked.set(v);
    return marked;
}

PrimeTable combine_parities(uint64_t n, const ParityTable& q14,
                            const ParityTable& q13, const ParityTable& hyp,
                            const Bitset& nonsqf,
                            std::span<const uint64_t> screened_primes) {
    PrimeTable table(n);
    if (n >= 2) table.bits.set(2);
    if (n >= 3) table.bits.set(3);

    // candidates coprime to 6 cycle through residues 5,7,11,1 mod 12,
    // which is also the table-selection order
    const ParityTable* pick[4] = {&q14, &q13, &hyp, &q14};
    uint64_t steps[4] = {2, 4, 2, 4};
    uint64_t k = 5;
    unsigned phase = 0;
    while (k <= n) {
        if (pick[phase]->bits.test(k) && !nonsqf.test(k)) table.bits.set(k);
        k += steps[phase];
        phase = (phase + 1) & 3;
    }

    for (uint64_t q : screened_primes)
        if (q >= 5 && q <= n) table.bits.set(q);
    return table;
}

PrimeTable atkin_sieve_merge(uint64_t n, bool wheel) {
    assert(n >= 2);
    sieve_core::ensure_table_budget(n);
    // three forms re-enumerate about 0.44n values after the mod-6 screen
    sieve_core::ensure_merge_budget(n, 0.5);

    std::vector<uint64_t> screen = {2, 3};
    if (wheel)
        for (uint64_t q : wheel_primes(n)) screen.push_back(q);

    ParityTable q14 = quad_parity_merge(n, 1, 4, screen);
    ParityTable q13 = quad_parity_merge(n, 1, 3, screen);
    ParityTable hyp = hyper_parity_merge(n, screen);
    Bitset nonsqf = nonsquarefree(n);
    return combine_parities(n, q14, q13, hyp, nonsqf, screen);
}

}  // namespace primetab::atkin_merge
