#pragma once

#include <cstdint>

#include "primetab/bitset.hpp"

namespace primetab {

// Primality of every k in [0, n]: bit k is 1 iff k is prime.
struct PrimeTable {
    uint64_t n = 0;
    Bitset bits;  // n + 1 bits

    PrimeTable() = default;
    explicit PrimeTable(uint64_t bound) : n(bound), bits(bound + 1) {}

    bool is_prime(uint64_t k) const { return k <= n && bits.test(k); }
    uint64_t count() const { return bits.count(); }  // pi(n)

    bool operator==(const PrimeTable&) const = default;
};

}  // namespace primetab
