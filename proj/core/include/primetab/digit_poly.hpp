#pragma once

#include <cstdint>
#include <vector>

#include "primetab/bignat.hpp"

namespace primetab::arith {

// Polynomial with nonnegative integer coefficients plus the digit width
// used when the polynomial is evaluated at x = 2^width_bits.
// Invariant: every coefficient < 2^width_bits (vacuous once width >= 64).
struct DigitPoly {
    uint32_t width_bits = 1;
    std::vector<uint64_t> coeffs;  // coeffs[i] multiplies 2^(i*width_bits)

    bool well_formed() const {
        if (width_bits == 0) return false;
        if (width_bits >= 64) return true;
        uint64_t limit = uint64_t{1} << width_bits;
        for (uint64_t c : coeffs)
            if (c >= limit) return false;
        return true;
    }
};

// Evaluate at x = 2^width_bits. The inverse of poly_unpack.
BigNat poly_pack(const DigitPoly& poly);

// Split the low len digits of width_bits bits each back out of x.
// Throws OverflowContract if a digit wider than 64 bits has high bits set,
// since coefficients are carried as u64.
DigitPoly poly_unpack(const BigNat& x, uint32_t width_bits, size_t len);

// Coefficient-wise product (convolution) computed through one big-integer
// multiplication at digit width out_width_bits. Caller guarantees every
// convolution coefficient is < 2^out_width_bits, so no carries cross digit
// boundaries and the digits of the product are exactly the convolution.
//
// verify_samples > 0 turns on spot checks: that many randomly chosen output
// coefficients are recomputed directly, and OverflowContract is thrown if
// one violates the width bound.
DigitPoly poly_mul(const DigitPoly& p, const DigitPoly& q, uint32_t out_width_bits,
                   size_t verify_samples = 0, uint64_t verify_seed = 1);

}  // namespace primetab::arith
