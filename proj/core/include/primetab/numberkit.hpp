#pragma once

#include <cstdint>
#include <vector>

#include "primetab/bignat.hpp"
#include "primetab/prime_table.hpp"

namespace primetab::numberkit {

// Prime factorization as ascending (prime, exponent) pairs.
struct PrimeFactorization {
    struct Entry {
        uint64_t prime;
        uint64_t exponent;

        bool operator==(const Entry&) const = default;
    };
    std::vector<Entry> factors;

    arith::BigNat value() const;      // evaluate the product
    uint64_t exponent_sum() const;    // sum of all exponents

    bool operator==(const PrimeFactorization&) const = default;
};

// p-adic valuation of C(n,k): carries when adding k and n-k in base p.
uint64_t kummer_exponent(uint64_t n, uint64_t k, uint64_t p);

// p-adic valuation of n!: sum of floor(n / p^i).
uint64_t legendre_exponent(uint64_t n, uint64_t p);

// Factor C(n,k) by evaluating kummer_exponent at every prime <= n.
// Throws TableTooSmall if the table does not cover n.
PrimeFactorization binomial_factorization(uint64_t n, uint64_t k,
                                          const PrimeTable& primes);

// Exact C(n,k): prime powers by repeated squaring, combined with a
// balanced product tree.
arith::BigNat binomial(uint64_t n, uint64_t k, const PrimeTable& primes);

// Balanced pairwise product of a list; empty product is 1.
arith::BigNat product_tree(std::vector<arith::BigNat> items);

// n! as a plain running product.
arith::BigNat factorial_iterative(uint64_t n);

// n! by nested squaring over exponent bit-groups: pi_j is the product of
// the primes whose Legendre exponent has bit j-1 set, and the result is
// the fold pi_1 * (pi_2 * (pi_3 * (...)^2)^2)^2.
arith::BigNat factorial_schonhage(uint64_t n, const PrimeTable& primes);

// n! by the half-size recursion  n! = ceil(n/2)^r * C(n, n/2) * (n/2 !)^2,
// r = n mod 2 (integral n/2), bottoming out in a direct product.
arith::BigNat factorial_vardi(uint64_t n, const PrimeTable& primes);

}  // namespace primetab::numberkit
