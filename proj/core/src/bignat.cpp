#include "primetab/bignat.hpp"

#include <gmp.h>

#include <bit>
#include <cassert>
#include <cstdlib>
#include <stdexcept>

static_assert(sizeof(mp_limb_t) == 8, "build expects 64-bit GMP limbs");
static_assert(GMP_NAIL_BITS == 0, "build expects nail-free GMP");

namespace primetab::arith {

void BigNat::normalize() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigNat BigNat::from_limbs(std::vector<uint64_t> limbs) {
    BigNat out;
    out.limbs_ = std::move(limbs);
    out.normalize();
    return out;
}

BigNat BigNat::from_decimal(std::string_view text) {
    mpz_t z;
    if (mpz_init_set_str(z, std::string(text).c_str(), 10) != 0 ||
        mpz_sgn(z) < 0) {
        mpz_clear(z);
        throw std::invalid_argument("not an unsigned decimal literal");
    }
    BigNat out;
    if (mpz_sgn(z) != 0) {
        out.limbs_.resize((mpz_sizeinbase(z, 2) + 63) / 64);
        size_t count = 0;
        mpz_export(out.limbs_.data(), &count, -1, 8, 0, 0, z);
        out.limbs_.resize(count);
    }
    mpz_clear(z);
    out.normalize();
    return out;
}

uint64_t BigNat::bit_length() const {
    if (limbs_.empty()) return 0;
    return (limbs_.size() - 1) * 64 + (64 - std::countl_zero(limbs_.back()));
}

uint64_t BigNat::extract_u64(uint64_t offset, unsigned count) const {
    assert(count <= 64);
    if (count == 0) return 0;
    size_t w = offset >> 6;
    unsigned shift = offset & 63;
    uint64_t lo = w < limbs_.size() ? limbs_[w] : 0;
    uint64_t value = lo >> shift;
    if (shift && w + 1 < limbs_.size()) value |= limbs_[w + 1] << (64 - shift);
    if (count < 64) value &= (uint64_t{1} << count) - 1;
    return value;
}

BigNat BigNat::extract_bits(uint64_t offset, uint64_t count) const {
    BigNat out;
    out.limbs_.reserve(count / 64 + 1);
    for (uint64_t taken = 0; taken < count; taken += 64) {
        unsigned piece = count - taken >= 64 ? 64u : unsigned(count - taken);
        out.limbs_.push_back(extract_u64(offset + taken, piece));
    }
    out.normalize();
    return out;
}

uint64_t BigNat::to_u64() const {
    if (limbs_.size() > 1) throw std::overflow_error("BigNat exceeds 64 bits");
    return limbs_.empty() ? 0 : limbs_[0];
}

std::string BigNat::to_decimal() const {
    mpz_t z;
    mpz_init(z);
    if (!limbs_.empty())
        mpz_import(z, limbs_.size(), -1, 8, 0, 0, limbs_.data());
    char* raw = mpz_get_str(nullptr, 10, z);
    std::string out(raw);
    void (*free_fn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &free_fn);
    free_fn(raw, out.size() + 1);
    mpz_clear(z);
    return out;
}

BigNat& BigNat::imul_u64(uint64_t factor) {
    if (factor == 0 || limbs_.empty()) {
        limbs_.clear();
        return *this;
    }
    mp_limb_t carry = mpn_mul_1(limbs_.data(), limbs_.data(), limbs_.size(), factor);
    if (carry) limbs_.push_back(carry);
    return *this;
}

uint64_t BigNat::idivmod_u64(uint64_t divisor) {
    assert(divisor != 0);
    if (limbs_.empty()) return 0;
    mp_limb_t rem =
        mpn_divrem_1(limbs_.data(), 0, limbs_.data(), limbs_.size(), divisor);
    normalize();
    return rem;
}

int BigNat::compare(const BigNat& other) const {
    if (limbs_.size() != other.limbs_.size())
        return limbs_.size() < other.limbs_.size() ? -1 : 1;
    if (limbs_.empty()) return 0;
    return mpn_cmp(limbs_.data(), other.limbs_.data(), limbs_.size());
}

void BigNat::Builder::place_u64(uint64_t value, uint64_t bit_offset) {
    size_t w = bit_offset >> 6;
    unsigned shift = bit_offset & 63;
    limbs_[w] |= value << shift;
    if (shift) limbs_[w + 1] |= value >> (64 - shift);
}

void BigNat::Builder::place_add_u64(uint64_t value, uint64_t bit_offset) {
    size_t w = bit_offset >> 6;
    unsigned shift = bit_offset & 63;
    uint64_t lo = value << shift;
    uint64_t hi = shift ? value >> (64 - shift) : 0;
    uint64_t carry = (limbs_[w] += lo) < lo ? 1 : 0;
    for (size_t i = w + 1; carry || hi; ++i) {
        uint64_t add = hi + carry;
        carry = (limbs_[i] += add) < add ? 1 : 0;
        hi = 0;
    }
}

void BigNat::Builder::place(const BigNat& value, uint64_t bit_offset) {
    const auto& src = value.limbs();
    for (size_t i = 0; i < src.size(); ++i)
        place_u64(src[i], bit_offset + i * 64);
}

BigNat BigNat::Builder::take() && { return BigNat::from_limbs(std::move(limbs_)); }

BigNat add(const BigNat& a, const BigNat& b) {
    const BigNat& big = a.limbs_.size() >= b.limbs_.size() ? a : b;
    const BigNat& small = &big == &a ? b : a;
    if (small.limbs_.empty()) return big;
    BigNat out;
    out.limbs_.resize(big.limbs_.size() + 1);
    mp_limb_t carry = mpn_add(out.limbs_.data(), big.limbs_.data(), big.limbs_.size(),
                              small.limbs_.data(), small.limbs_.size());
    out.limbs_.back() = carry;
    out.normalize();
    return out;
}

BigNat sub(const BigNat& a, const BigNat& b) {
    assert(a.compare(b) >= 0);
    if (b.limbs_.empty()) return a;
    BigNat out;
    out.limbs_.resize(a.limbs_.size());
    mpn_sub(out.limbs_.data(), a.limbs_.data(), a.limbs_.size(),
            b.limbs_.data(), b.limbs_.size());
    out.normalize();
    return out;
}

BigNat mul(const BigNat& a, const BigNat& b) {
    if (a.limbs_.empty() || b.limbs_.empty()) return BigNat{};
    if (a == b) return square(a);
    const BigNat& big = a.limbs_.size() >= b.limbs_.size() ? a : b;
    const BigNat& small = &big == &a ? b : a;
    BigNat out;
    out.limbs_.resize(big.limbs_.size() + small.limbs_.size());
    mpn_mul(out.limbs_.data(), big.limbs_.data(), big.limbs_.size(),
            small.limbs_.data(), small.limbs_.size());
    out.normalize();
    return out;
}

BigNat square(const BigNat& a) {
    if (a.limbs_.empty()) return BigNat{};
    BigNat out;
    out.limbs_.resize(2 * a.limbs_.size());
    mpn_sqr(out.limbs_.data(), a.limbs_.data(), a.limbs_.size());
    out.normalize();
    return out;
}

}  // namespace primetab::arith
