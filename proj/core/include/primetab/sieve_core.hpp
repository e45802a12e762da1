#pragma once

#include <cstdint>
#include <vector>

#include "primetab/prime_table.hpp"

namespace primetab::sieve_core {

// Ascending list of u64 values; duplicates allowed.
struct RunList {
    std::vector<uint64_t> values;

    bool empty() const { return values.empty(); }
    size_t size() const { return values.size(); }
};

// Memory budgets. Table generators refuse work whose primality bitmap
// would exceed the table budget; list-based sieves also refuse work whose
// run lists would exceed the merge budget.
inline constexpr uint64_t kTableByteBudget = uint64_t{1} << 30;
inline constexpr uint64_t kMergeByteBudget = uint64_t{3} << 30;

// Throw CapacityExceeded if a table / an expected values_per_n * n run-list
// load would overrun the budgets above.
void ensure_table_budget(uint64_t n);
void ensure_merge_budget(uint64_t n, double values_per_n);

// Classic sieve of Eratosthenes; the reference generator everything else
// is checked against.
PrimeTable eratosthenes(uint64_t n);

// Merge-based sieve: per-prime multiple lists (starting at p^2) merged in
// a balanced tournament, then composites struck from a full bitmap.
PrimeTable schonhage_merge_sieve(uint64_t n);

// Balanced pairwise tournament merge of ascending lists. Output holds the
// multiset union: its length is the sum of the input lengths.
RunList merge_runs(std::vector<RunList> runs);

// Values that occur an odd number of times, each emitted once, ascending.
RunList odd_multiplicity(const RunList& run);

}  // namespace primetab::sieve_core
