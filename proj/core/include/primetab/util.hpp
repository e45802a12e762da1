#pragma once

#include <bit>
#include <cstdint>

namespace primetab {

// floor(sqrt(n)), exact for all u64 (std::sqrt alone rounds wrong near 2^52).
uint64_t isqrt(uint64_t n);

// smallest r with r*r >= n
uint64_t ceil_sqrt(uint64_t n);

inline bool is_square(uint64_t n) {
    uint64_t r = isqrt(n);
    return r * r == n;
}

// smallest e with 2^e >= n; ceil_log2(0) and ceil_log2(1) are 0
inline unsigned ceil_log2(uint64_t n) {
    return n <= 1 ? 0u : static_cast<unsigned>(64 - std::countl_zero(n - 1));
}

inline unsigned floor_log2(uint64_t n) {
    return n == 0 ? 0u : static_cast<unsigned>(63 - std::countl_zero(n));
}

// Process-wide worker budget for ops that can split work internally.
// Results never depend on it. Default 1.
void set_thread_budget(unsigned workers);
unsigned thread_budget();

}  // namespace primetab
