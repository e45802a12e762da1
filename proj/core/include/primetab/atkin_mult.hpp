#pragma once

#include <array>
#include <cstdint>

#include "primetab/atkin_merge.hpp"
#include "primetab/digit_poly.hpp"
#include "primetab/prime_table.hpp"

namespace primetab::atkin_mult {

using atkin_merge::ParityTable;

// Digit width used for packed indicator products at bound n: half the bits
// of n plus two guard bits, so a convolution coefficient (at most the
// square-term count, about sqrt(n)) can never reach the digit boundary.
uint32_t digit_width_bits(uint64_t n);

// Indicator polynomials of the admissible square terms c*t^2 <= n (t >= 1),
// split by value mod 6 and exponent-compressed: classes[r] holds coefficient
// 1 at index m for each term value v = 6m + r. Classes are trimmed, so a
// class with no terms has an empty polynomial.
struct ResidueClassedIndicators {
    uint64_t n = 0;
    std::array<arith::DigitPoly, 6> classes;
};

ResidueClassedIndicators classify_terms(uint64_t n, unsigned coefficient,
                                        uint32_t width_bits);

// Parity of #{(x,y) : x,y >= 1, x^2 + b*y^2 = k} for k in [1, n] coprime
// to 6, computed as polynomial products of class indicators (one big-int
// multiplication per admissible class pair). Bits at positions not coprime
// to 6 read 0. a must be 1; b picks the form, 4 or 3.
ParityTable quad_parity_mult(uint64_t n, unsigned a, unsigned b);

// Parity of #{(x,y) : x > y > 0, 3x^2 - y^2 = k} for k in [1, n] coprime
// to 6. The x > y constraint breaks the product structure, so the (x, y)
// domain is cut into rectangles (handled as shifted class products) plus
// log log n levels of leftover squares (handled as run lists).
ParityTable hyper_parity_mult(uint64_t n);

enum class Form { quad4, quad3, hyper };

// Exact representation count of k by one form, by brute force over x.
uint64_t count_representations(uint64_t k, Form form);

// Atkin sieve, multiplication realization.
PrimeTable atkin_sieve_mult(uint64_t n);

}  // namespace primetab::atkin_mult
