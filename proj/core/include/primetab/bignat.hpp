#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace primetab::arith {

// Arbitrary-precision unsigned integer, little-endian 64-bit limbs,
// canonical form (no trailing zero limb). The zero value has no limbs.
class BigNat {
   public:
    BigNat() = default;
    explicit BigNat(uint64_t value) {
        if (value) limbs_.push_back(value);
    }

    static BigNat from_limbs(std::vector<uint64_t> limbs);
    static BigNat from_decimal(std::string_view text);

    bool is_zero() const { return limbs_.empty(); }
    size_t limb_count() const { return limbs_.size(); }
    const std::vector<uint64_t>& limbs() const { return limbs_; }
    uint64_t limb(size_t i) const { return i < limbs_.size() ? limbs_[i] : 0; }

    uint64_t bit_length() const;
    bool bit(uint64_t i) const {
        size_t w = i >> 6;
        return w < limbs_.size() && ((limbs_[w] >> (i & 63)) & 1);
    }

    // value of the bit window [offset, offset + count), as an integer
    BigNat extract_bits(uint64_t offset, uint64_t count) const;
    // same but count <= 64, returned directly
    uint64_t extract_u64(uint64_t offset, unsigned count) const;

    bool fits_u64() const { return limbs_.size() <= 1; }
    uint64_t to_u64() const;  // value must fit
    std::string to_decimal() const;

    BigNat& imul_u64(uint64_t factor);
    // divide in place, returning the remainder
    uint64_t idivmod_u64(uint64_t divisor);

    int compare(const BigNat& other) const;
    bool operator==(const BigNat&) const = default;
    bool operator<(const BigNat& o) const { return compare(o) < 0; }
    bool operator<=(const BigNat& o) const { return compare(o) <= 0; }

    // Assembles a value by dropping pieces at fixed bit offsets.
    class Builder {
       public:
        explicit Builder(uint64_t bit_capacity)
            : limbs_(bit_capacity / 64 + 2, 0) {}

        // OR a 64-bit piece in; caller guarantees the window was zero
        void place_u64(uint64_t value, uint64_t bit_offset);
        // add a 64-bit piece with carry propagation
        void place_add_u64(uint64_t value, uint64_t bit_offset);
        // OR a whole value in; caller guarantees the window was zero
        void place(const BigNat& value, uint64_t bit_offset);

        BigNat take() &&;

       private:
        std::vector<uint64_t> limbs_;
    };

   private:
    std::vector<uint64_t> limbs_;
    void normalize();
    friend BigNat add(const BigNat&, const BigNat&);
    friend BigNat sub(const BigNat&, const BigNat&);
    friend BigNat mul(const BigNat&, const BigNat&);
    friend BigNat square(const BigNat&);
};

BigNat add(const BigNat& a, const BigNat& b);
BigNat sub(const BigNat& a, const BigNat& b);  // requires a >= b
BigNat mul(const BigNat& a, const BigNat& b);
BigNat square(const BigNat& a);

}  // namespace primetab::arith
