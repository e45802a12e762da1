#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "primetab/bignat.hpp"

namespace primetab::packmul {

// Subset of [0, k) with no 3-term arithmetic progression.
struct ProgressionFreeSet {
    uint64_t k = 0;                 // universe size
    std::vector<uint64_t> indices;  // ascending

    bool operator==(const ProgressionFreeSet&) const = default;
};

enum class Construction {
    base3,    // integers whose base-3 digits are 0/1; size ~ k^(log3 2)
    behrend,  // best fixed-norm shell of a digit cube; denser for large k
};

ProgressionFreeSet build_ap_free(uint64_t k,
                                 Construction method = Construction::base3);

// Slot layout for one batched multiplication: pair t goes to slot
// assignment[t], each slot_width_bits wide, so every convolution digit of
// the packed product holds its full sum without carrying into a neighbor.
struct PackedBatch {
    uint64_t pair_count = 0;
    uint64_t operand_bits = 0;       // a: every operand < 2^a
    uint64_t slot_width_bits = 0;    // 2a + ceil(log2 pair_count) + 1
    ProgressionFreeSet slots;        // universe grown in powers of 3
    std::vector<uint64_t> assignment;  // pair t -> slot index s_t, injective
};

PackedBatch plan_batch(uint64_t pair_count, uint64_t operand_bits);

// All pair products through ONE big multiplication: operands are packed
// into progression-free slots of A and B, and product t is read back from
// slot 2*s_t of A*B. Throws OperandTooLarge if an operand needs more than
// operand_bits bits.
std::vector<arith::BigNat> pack_and_multiply(
    const std::vector<std::pair<arith::BigNat, arith::BigNat>>& pairs,
    uint64_t operand_bits);

}  // namespace primetab::packmul
