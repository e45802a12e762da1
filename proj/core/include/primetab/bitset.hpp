#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace primetab {

// Flat bit vector, LSB-first inside 64-bit words. Pad bits in the last
// word stay zero so whole-word equality and popcount are valid.
class Bitset {
   public:
    Bitset() = default;
    explicit Bitset(uint64_t bit_count, bool value = false)
        : bits_(bit_count),
          words_((bit_count + 63) / 64, value ? ~uint64_t{0} : uint64_t{0}) {
        clear_padding();
    }

    uint64_t size() const { return bits_; }

    bool test(uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(uint64_t i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(uint64_t i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    void flip(uint64_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

    uint64_t count() const {
        uint64_t total = 0;
        for (uint64_t w : words_) total += std::popcount(w);
        return total;
    }

    std::span<uint64_t> words() { return words_; }
    std::span<const uint64_t> words() const { return words_; }

    // Call after writing raw words to restore the pad invariant.
    void clear_padding() {
        if (bits_ & 63) words_.back() &= (~uint64_t{0}) >> (64 - (bits_ & 63));
    }

    bool operator==(const Bitset&) const = default;

    // Index of the lowest bit where the two sets differ (sizes must match).
    std::optional<uint64_t> first_difference(const Bitset& other) const {
        for (size_t w = 0; w < words_.size(); ++w) {
            uint64_t x = words_[w] ^ other.words_[w];
            if (x) return (uint64_t(w) << 6) + std::countr_zero(x);
        }
        return std::nullopt;
    }

   private:
    uint64_t bits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace primetab
