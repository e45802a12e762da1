#include "primetab/digit_poly.hpp"

#include <cassert>
#include <random>

#include "primetab/errors.hpp"

namespace primetab::arith {

namespace {

BigNat pack_at(const std::vector<uint64_t>& coeffs, uint64_t w) {
    BigNat::Builder builder(coeffs.size() * w);
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i]) builder.place_add_u64(coeffs[i], i * w);
    return std::move(builder).take();
}

}  // namespace

BigNat poly_pack(const DigitPoly& poly) {
    assert(poly.well_formed());
    return pack_at(poly.coeffs, poly.width_bits);
}

DigitPoly poly_unpack(const BigNat& x, uint32_t width_bits, size_t len) {
    DigitPoly out;
    out.width_bits = width_bits;
    out.coeffs.resize(len);
    if (width_bits <= 64) {
        for (size_t i = 0; i < len; ++i)
            out.coeffs[i] = x.extract_u64(i * uint64_t{width_bits}, width_bits);
    } else {
        for (size_t i = 0; i < len; ++i) {
            BigNat digit = x.extract_bits(i * uint64_t{width_bits}, width_bits);
            if (!digit.fits_u64())
                throw OverflowContract("unpacked digit exceeds 64-bit coefficient");
            out.coeffs[i] = digit.to_u64();
        }
    }
    return out;
}

namespace {

// Recompute convolution coefficient k directly; throw if it breaks the
// width bound the packed product relies on.
void check_sample(const DigitPoly& p, const DigitPoly& q, uint32_t w, size_t k) {
    size_t lo = k >= q.coeffs.size() ? k - q.coeffs.size() + 1 : 0;
    size_t hi = std::min(k, p.coeffs.size() - 1);
    unsigned __int128 sum = 0;
    uint64_t wraps = 0;
    for (size_t i = lo; i <= hi; ++i) {
        unsigned __int128 term =
            (unsigned __int128)p.coeffs[i] * q.coeffs[k - i];
        sum += term;
        if (sum < term) ++wraps;
    }
    bool violated;
    if (w >= 192)
        violated = false;
    else if (w >= 128)
        violated = wraps >> (w - 128) ? true : false;
    else
        violated = wraps != 0 || (sum >> w) != 0;
    if (violated)
        throw OverflowContract("convolution coefficient exceeds digit width");
}

}  // namespace

DigitPoly poly_mul(const DigitPoly& p, const DigitPoly& q, uint32_t out_width_bits,
                   size_t verify_samples, uint64_t verify_seed) {
    if (p.coeffs.empty() || q.coeffs.empty())
        return DigitPoly{out_width_bits, {}};
    size_t out_len = p.coeffs.size() + q.coeffs.size() - 1;

    if (verify_samples > 0) {
        std::mt19937_64 rng(verify_seed);
        std::uniform_int_distribution<size_t> pick(0, out_len - 1);
        for (size_t s = 0; s < verify_samples; ++s)
            check_sample(p, q, out_width_bits, pick(rng));
    }

    BigNat product = mul(pack_at(p.coeffs, out_width_bits),
                         pack_at(q.coeffs, out_width_bits));
    return poly_unpack(product, out_width_bits, out_len);
}

}  // namespace primetab::arith
