#include "primetab/atkin_mult.hpp"

#include <algorithm>
#include <cassert>
#include <future>

#include "primetab/errors.hpp"
#include "primetab/util.hpp"

namespace primetab::atkin_mult {

using arith::DigitPoly;
using sieve_core::RunList;

uint32_t digit_width_bits(uint64_t n) {
    return (ceil_log2(n) + 1) / 2 + 2;
}

namespace {

void trim(DigitPoly& p) {
    while (!p.coeffs.empty() && p.coeffs.back() == 0) p.coeffs.pop_back();
}

bool coprime6(uint64_t r) {
    r %= 6;
    return r == 1 || r == 5;
}

}  // namespace

ResidueClassedIndicators classify_terms(uint64_t n, unsigned coefficient,
                                        uint32_t width_bits) {
    assert(coefficient >= 1);
    ResidueClassedIndicators out;
    out.n = n;
    for (auto& c : out.classes) c.width_bits = width_bits;
    if (n < coefficient) return out;
    for (auto& c : out.classes) c.coeffs.assign(n / 6 + 1, 0);
    for (uint64_t t = 1;; ++t) {
        uint64_t v = coefficient * t * t;
        if (v > n) break;
        out.classes[v % 6].coeffs[v / 6] = 1;
    }
    for (auto& c : out.classes) trim(c);
    return out;
}

ParityTable quad_parity_mult(uint64_t n, unsigned a, unsigned b) {
    assert(a == 1 && (b == 3 || b == 4));
    (void)a;
    sieve_core::ensure_table_budget(n);
    uint32_t w = digit_width_bits(n);
    // term count bounds every convolution coefficient; insist on a spare bit
    if (w < 63 && isqrt(n) >= uint64_t{1} << (w - 1))
        throw OverflowContract("digit width leaves no headroom at n=" +
                               std::to_string(n));

    ResidueClassedIndicators xs = classify_terms(n, 1, w);
    ResidueClassedIndicators ys = classify_terms(n, b, w);

    struct Job {
        unsigned r, s;
    };
    std::vector<Job> jobs;
    for (unsigned r = 0; r < 6; ++r)
        for (unsigned s = 0; s < 6; ++s)
            if (coprime6(r + s) && !xs.classes[r].coeffs.empty() &&
                !ys.classes[s].coeffs.empty())
                jobs.push_back({r, s});

    std::vector<DigitPoly> products(jobs.size());
    unsigned workers = unsigned(std::min<size_t>(thread_budget(), jobs.size()));
    if (workers > 1) {
        std::vector<std::future<DigitPoly>> pending;
        for (const Job& job : jobs)
            pending.push_back(std::async(std::launch::async, [&, job] {
                return arith::poly_mul(xs.classes[job.r], ys.classes[job.s], w);
            }));
        for (size_t j = 0; j < jobs.size(); ++j) products[j] = pending[j].get();
    } else {
        for (size_t j = 0; j < jobs.size(); ++j)
            products[j] = arith::poly_mul(xs.classes[jobs[j].r],
                                          ys.classes[jobs[j].s], w);
    }

    ParityTable table(n);
    for (size_t j = 0; j < jobs.size(); ++j) {
        uint64_t offset = jobs[j].r + jobs[j].s;
        const auto& coeffs = products[j].coeffs;
        for (size_t t = 0; t < coeffs.size(); ++t) {
            if ((coeffs[t] & 1) == 0) continue;
            uint64_t k = 6 * t + offset;
            if (k <= n) table.bits.flip(k);
        }
    }
    return table;
}

namespace {

struct HyperState {
    uint64_t n = 0;
    uint32_t w = 0;
    unsigned max_depth = 0;
    ParityTable table;
    std::vector<RunList> leftovers;
};

// Rectangle x in [xlo, xhi), y in [ylo, yhi) with yhi <= xlo, handled as a
// product of shifted indicators: exponents 3x^2 - base against S - y^2
// (S = (yhi-1)^2), so k = sum + base - S. Only class pairs landing on k
// coprime to 6 are multiplied.
void rect_product(HyperState& st, uint64_t xlo, uint64_t xhi, uint64_t ylo,
                  uint64_t yhi) {
    uint64_t n = st.n;
    uint64_t ycap = yhi - 1;
    uint64_t xcap = isqrt((n + ycap * ycap) / 3);  // largest x usable at y = ycap
    xhi = std::min(xhi, xcap + 1);
    uint64_t base = 3 * xlo * xlo;
    if (base > n) ylo = std::max(ylo, ceil_sqrt(base - n));
    if (xlo >= xhi || ylo >= yhi) return;

    uint64_t S = ycap * ycap;
    uint64_t shift = base - S;  // positive: yhi <= xlo makes S < base

    std::array<DigitPoly, 6> xcls, ycls;
    uint64_t xtop = 3 * (xhi - 1) * (xhi - 1) - base;
    uint64_t ytop = S - ylo * ylo;
    for (unsigned r = 0; r < 6; ++r) {
        xcls[r].width_bits = st.w;
        ycls[r].width_bits = st.w;
        xcls[r].coeffs.assign(xtop / 6 + 1, 0);
        ycls[r].coeffs.assign(ytop / 6 + 1, 0);
    }
    for (uint64_t x = xlo; x < xhi; ++x) {
        uint64_t e = 3 * x * x - base;
        xcls[e % 6].coeffs[e / 6] = 1;
    }
    for (uint64_t y = ylo; y < yhi; ++y) {
        uint64_t e = S - y * y;
        ycls[e % 6].coeffs[e / 6] = 1;
    }
    for (auto& c : xcls) trim(c);
    for (auto& c : ycls) trim(c);

    for (unsigned r = 0; r < 6; ++r) {
        if (xcls[r].coeffs.empty()) continue;
        for (unsigned s = 0; s < 6; ++s) {
            if (ycls[s].coeffs.empty()) continue;
            if (!coprime6(r + s + shift)) continue;
            DigitPoly prod = arith::poly_mul(xcls[r], ycls[s], st.w);
            uint64_t offset = r + s + shift;
            for (size_t t = 0; t < prod.coeffs.size(); ++t) {
                if ((prod.coeffs[t] & 1) == 0) continue;
                uint64_t k = 6 * t + offset;
                if (k <= n) st.table.bits.flip(k);  // corners may exceed n
            }
        }
    }
}

// Remaining square region: enumerate pairs directly into run lists,
// already screened to values coprime to 6 (y of opposite parity, 3 !| y).
void leaf_pairs(HyperState& st, uint64_t lo, uint64_t hi) {
    uint64_t n = st.n;
    for (uint64_t x = std::max<uint64_t>(lo, 2); x < hi; ++x) {
        if (2 * x * x + 2 * x > n + 1) break;  // smallest value beyond n
        uint64_t triple = 3 * x * x;
        uint64_t ymin = std::max<uint64_t>(lo, 1);
        if (triple > n) ymin = std::max(ymin, ceil_sqrt(triple - n));
        RunList run;
        run.values.reserve((x - ymin) / 2 + 1);
        uint64_t y = x - 1;  // opposite parity from x, stepping by 2 keeps it
        while (y >= ymin) {
            if (y % 3 != 0) run.values.push_back(triple - y * y);
            if (y < ymin + 2) break;
            y -= 2;
        }
        if (!run.empty()) st.leftovers.push_back(std::move(run));
    }
}

void split_region(HyperState& st, uint64_t lo, uint64_t hi, unsigned depth) {
    if (2 * lo * lo + 6 * lo + 3 > st.n) return;  // min value v(lo+1, lo)
    if (hi - lo <= 1 || depth >= st.max_depth) {
        leaf_pairs(st, lo, hi);
        return;
    }
    uint64_t mid = lo + (hi - lo) / 2;
    rect_product(st, mid, hi, std::max<uint64_t>(lo, 1), mid);
    split_region(st, lo, mid, depth + 1);
    split_region(st, mid, hi, depth + 1);
}

}  // namespace

ParityTable hyper_parity_mult(uint64_t n) {
    sieve_core::ensure_table_budget(n);
    HyperState st;
    st.n = n;
    st.w = digit_width_bits(n);
    st.max_depth = ceil_log2(ceil_log2(n));  // log log n split levels
    st.table = ParityTable(n);

    uint64_t xmax = n >= 11 ? (isqrt(2 * n + 3) - 1) / 2 : 1;
    while (2 * (xmax + 1) * (xmax + 1) + 2 * (xmax + 1) <= n + 1) ++xmax;
    while (xmax > 1 && 2 * xmax * xmax + 2 * xmax > n + 1) --xmax;

    split_region(st, 1, xmax + 1, 0);

    RunList merged = sieve_core::merge_runs(std::move(st.leftovers));
    RunList odd = sieve_core::odd_multiplicity(merged);
    for (uint64_t v : odd.values) st.table.bits.flip(v);
    return std::move(st.table);
}

uint64_t count_representations(uint64_t k, Form form) {
    uint64_t count = 0;
    switch (form) {
        case Form::quad4:
            for (uint64_t x = 1; x * x < k; ++x) {
                uint64_t rem = k - x * x;
                if (rem % 4 == 0 && rem >= 4 && is_square(rem / 4)) ++count;
            }
            break;
        case Form::quad3:
            for (uint64_t x = 1; x * x < k; ++x) {
                uint64_t rem = k - x * x;
                if (rem % 3 == 0 && rem >= 3 && is_square(rem / 3)) ++count;
            }
            break;
        case Form::hyper:
            for (uint64_t x = 2; 2 * x * x + 2 * x <= k + 1; ++x) {
                uint64_t triple = 3 * x * x;
                if (triple <= k) continue;
                uint64_t t = triple - k;  // y^2 if representable
                if (is_square(t) && t >= 1) ++count;
            }
            break;
    }
    return count;
}

PrimeTable atkin_sieve_mult(uint64_t n) {
    assert(n >= 2);
    sieve_core::ensure_table_budget(n);
    sieve_core::ensure_merge_budget(n, 2.0);  // indicator polys dominate

    ParityTable q14 = quad_parity_mult(n, 1, 4);
    ParityTable q13 = quad_parity_mult(n, 1, 3);
    ParityTable hyp = hyper_parity_mult(n);
    Bitset nonsqf = atkin_merge::nonsquarefree(n);
    return atkin_merge::combine_parities(n, q14, q13, hyp, nonsqf, {});
}

}  // namespace primetab::atkin_mult
