#include "primetab/util.hpp"

#include <atomic>
#include <cmath>

namespace primetab {

uint64_t isqrt(uint64_t n) {
    if (n == 0) return 0;
    // double has 53 mantissa bits, so seed from sqrt and fix up by hand
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

uint64_t ceil_sqrt(uint64_t n) {
    uint64_t r = isqrt(n);
    return r * r == n ? r : r + 1;
}

namespace {
std::atomic<unsigned> g_thread_budget{1};
}

void set_thread_budget(unsigned workers) {
    g_thread_budget.store(workers == 0 ? 1 : workers, std::memory_order_relaxed);
}

unsigned thread_budget() {
    return g_thread_budget.load(std::memory_order_relaxed);
}

}  // namespace primetab
