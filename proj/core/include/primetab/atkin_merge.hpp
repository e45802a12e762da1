#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "primetab/bitset.hpp"
#include "primetab/prime_table.hpp"
#include "primetab/sieve_core.hpp"

namespace primetab::atkin_merge {

// bit k = parity of the number of admissible representations of k by one
// quadratic form. Positions screened out (or never touched) read 0.
struct ParityTable {
    uint64_t n = 0;
    Bitset bits;

    ParityTable() = default;
    explicit ParityTable(uint64_t bound) : n(bound), bits(bound + 1) {}

    bool parity(uint64_t k) const { return bits.test(k); }
};

// First ceil(sqrt(log2 n)) odd primes past 3; the optional screening wheel.
std::vector<uint64_t> wheel_primes(uint64_t n);

// Parity of #{(x,y) : x,y >= 1, x^2 + b*y^2 = k} for k in [1, n], computed
// by enumerating the representations into per-x run lists, merging, and
// keeping odd-multiplicity values. b selects the form: 4 or 3 (a is the
// x^2 coefficient and must be 1; kept so call sites name the whole form).
// Values divisible by a screen prime are dropped before merging and their
// bits read 0.
ParityTable quad_parity_merge(uint64_t n, unsigned a, unsigned b,
                              std::span<const uint64_t> screen = {});

// Same for the hyperbolic form 3x^2 - y^2 with x > y > 0.
ParityTable hyper_parity_merge(uint64_t n, std::span<const uint64_t> screen = {});

// bit k = 1 iff some square > 1 divides k. Small primes are struck
// directly; primes past max(8, ceil(log2 n)) go through run-list merging
// so the strided writes stay cache-friendly.
Bitset nonsquarefree(uint64_t n);

// Fold the three parity tables and the squarefree filter into a prime
// table: k coprime to 6 is prime iff its form parity (selected by k mod 12)
// is odd and k is squarefree; 2 and 3 are set directly. Primes that were
// screened away get re-set from screened_primes.
PrimeTable combine_parities(uint64_t n, const ParityTable& q14,
                            const ParityTable& q13, const ParityTable& hyp,
                            const Bitset& nonsqf,
                            std::span<const uint64_t> screened_primes);

// Atkin sieve, merge realization. wheel=true additionally screens
// representation values by wheel_primes(n) before merging; the output is
// identical either way.
PrimeTable atkin_sieve_merge(uint64_t n, bool wheel = false);

}  // namespace primetab::atkin_merge
