#include "primetab/packmul.hpp"

#include <algorithm>
#include <cmath>

#include "primetab/errors.hpp"
#include "primetab/util.hpp"

namespace primetab::packmul {

using arith::BigNat;

namespace {

// value whose base-3 digits are the bits of b
uint64_t bits_to_base3(uint64_t b) {
    uint64_t v = 0, pw = 1;
    while (b) {
        if (b & 1) v += pw;
        b >>= 1;
        if (b) pw *= 3;
    }
    return v;
}

ProgressionFreeSet build_base3(uint64_t k) {
    ProgressionFreeSet out;
    out.k = k;
    for (uint64_t b = 0;; ++b) {
        if (b >= (uint64_t{1} << 41)) break;  // 3^41 > 2^64; b is exhausted
        uint64_t v = bits_to_base3(b);
        if (v >= k) break;
        out.indices.push_back(v);
    }
    return out;
}

// Behrend-style: digits < m in base q = 2m-1 (so adding two members never
// carries), bucketed by squared norm; a fixed-norm shell has no 3-term
// progression because the sphere is strictly convex. For m = 2 the whole
// digit cube qualifies without the shell cut (a_i + c_i = 2b_i over digits
// 0/1 already forces a = c), which is what keeps this construction
// competitive at small k; a single shell only wins far beyond desk scale.
ProgressionFreeSet build_behrend(uint64_t k) {
    ProgressionFreeSet best;
    best.k = k;
    for (unsigned dim = 2; dim <= 13; ++dim) {
        uint64_t q = uint64_t(std::floor(std::pow(double(k), 1.0 / dim)));
        while (q > 1) {  // fix float rounding: ensure q^dim <= k
            uint64_t pw = 1;
            bool fits = true;
            for (unsigned i = 0; i < dim; ++i) {
                if (pw > k / q) {
                    fits = false;
                    break;
                }
                pw *= q;
            }
            if (fits && pw <= k) break;
            --q;
        }
        if (q < 3) break;  // q only shrinks as dim grows
        uint64_t m = (q + 1) / 2;  // digits in [0, m); 2(m-1) < q

        double points = std::pow(double(m), double(dim));
        if (points > double(1 << 22)) continue;  // cap the enumeration

        std::vector<std::vector<uint64_t>> shells(dim * (m - 1) * (m - 1) + 1);
        std::vector<uint64_t> digit(dim, 0);
        std::vector<uint64_t> place(dim, 1);
        for (unsigned i = 1; i < dim; ++i) place[i] = place[i - 1] * q;
        uint64_t value = 0, norm2 = 0;
        while (true) {
            shells[norm2].push_back(value);
            unsigned i = 0;
            for (; i < dim; ++i) {
                if (digit[i] + 1 < m) {
                    norm2 += 2 * digit[i] + 1;
                    value += place[i];
                    ++digit[i];
                    break;
                }
                norm2 -= digit[i] * digit[i];
                value -= digit[i] * place[i];
                digit[i] = 0;
            }
            if (i == dim) break;
        }

        std::vector<uint64_t> candidate;
        if (m == 2) {
            for (auto& shell : shells)
                candidate.insert(candidate.end(), shell.begin(), shell.end());
        } else {
            candidate = *std::max_element(
                shells.begin(), shells.end(),
                [](const auto& a, const auto& b) { return a.size() < b.size(); });
        }
        if (candidate.size() > best.indices.size()) {
            std::sort(candidate.begin(), candidate.end());
            best.indices = std::move(candidate);
        }
    }
    if (best.indices.empty()) return build_base3(k);  // tiny k degenerates
    return best;
}

}  // namespace

ProgressionFreeSet build_ap_free(uint64_t k, Construction method) {
    return method == Construction::base3 ? build_base3(k) : build_behrend(k);
}

PackedBatch plan_batch(uint64_t pair_count, uint64_t operand_bits) {
    PackedBatch batch;
    batch.pair_count = pair_count;
    batch.operand_bits = operand_bits;
    batch.slot_width_bits = 2 * operand_bits + ceil_log2(pair_count) + 1;
    uint64_t k = 1;
    ProgressionFreeSet set = build_ap_free(k);
    while (set.indices.size() < pair_count) {
        k *= 3;
        set = build_ap_free(k);
    }
    batch.assignment.assign(set.indices.begin(),
                            set.indices.begin() + pair_count);
    batch.slots = std::move(set);
    return batch;
}

std::vector<BigNat> pack_and_multiply(
    const std::vector<std::pair<BigNat, BigNat>>& pairs, uint64_t operand_bits) {
    for (const auto& [u, v] : pairs)
        if (u.bit_length() > operand_bits || v.bit_length() > operand_bits)
            throw OperandTooLarge("operand exceeds " +
                                  std::to_string(operand_bits) + " bits");
    if (pairs.empty()) return {};

    PackedBatch batch = plan_batch(pairs.size(), operand_bits);
    uint64_t w = batch.slot_width_bits;
    uint64_t top_slot = batch.assignment.back();

    BigNat::Builder a((top_slot + 1) * w);
    BigNat::Builder b((top_slot + 1) * w);
    for (size_t t = 0; t < pairs.size(); ++t) {
        a.place(pairs[t].first, batch.assignment[t] * w);
        b.place(pairs[t].second, batch.assignment[t] * w);
    }
    BigNat product = mul(std::move(a).take(), std::move(b).take());

    std::vector<BigNat> out;
    out.reserve(pairs.size());
    for (size_t t = 0; t < pairs.size(); ++t)
        out.push_back(product.extract_bits(2 * batch.assignment[t] * w, w));
    return out;
}

}  // namespace primetab::packmul
