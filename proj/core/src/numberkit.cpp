#include "primetab/numberkit.hpp"

#include <cassert>

#include "primetab/errors.hpp"
#include "primetab/util.hpp"

namespace primetab::numberkit {

using arith::BigNat;

namespace {

// base^exp by repeated squaring; caller guarantees the result fits
uint64_t pow_u64(uint64_t base, uint64_t exp) {
    uint64_t result = 1;
    while (exp) {
        if (exp & 1) result *= base;
        exp >>= 1;
        if (exp) base *= base;
    }
    return result;
}

BigNat pow_bignat(BigNat base, uint64_t exp) {
    BigNat result(1);
    while (exp) {
        if (exp & 1) result = mul(result, base);
        exp >>= 1;
        if (exp) base = square(base);
    }
    return result;
}

void require_covers(const PrimeTable& primes, uint64_t n) {
    if (primes.n < n)
        throw TableTooSmall("prime table covers [0, " + std::to_string(primes.n) +
                            "], need " + std::to_string(n));
}

}  // namespace

BigNat PrimeFactorization::value() const {
    std::vector<BigNat> leaves;
    leaves.reserve(factors.size());
    for (const Entry& f : factors)
        leaves.push_back(pow_bignat(BigNat(f.prime), f.exponent));
    return product_tree(std::move(leaves));
}

uint64_t PrimeFactorization::exponent_sum() const {
    uint64_t total = 0;
    for (const Entry& f : factors) total += f.exponent;
    return total;
}

uint64_t kummer_exponent(uint64_t n, uint64_t k, uint64_t p) {
    assert(p >= 2 && k <= n);
    uint64_t carries = 0;
    uint64_t carry = 0;
    uint64_t a = k, b = n - k;
    while (a || b || carry) {
        carry = (a % p + b % p + carry) >= p ? 1 : 0;
        carries += carry;
        a /= p;
        b /= p;
    }
    return carries;
}

uint64_t legendre_exponent(uint64_t n, uint64_t p) {
    assert(p >= 2);
    uint64_t total = 0;
    while (n) {
        n /= p;
        total += n;
    }
    return total;
}

PrimeFactorization binomial_factorization(uint64_t n, uint64_t k,
                                          const PrimeTable& primes) {
    assert(k <= n);
    require_covers(primes, n);
    PrimeFactorization out;
    for (uint64_t p = 2; p <= n; ++p) {
        if (!primes.bits.test(p)) continue;
        uint64_t e = kummer_exponent(n, k, p);
        if (e) out.factors.push_back({p, e});
    }
    return out;
}

BigNat product_tree(std::vector<BigNat> items) {
    if (items.empty()) return BigNat(1);
    std::vector<BigNat> next;
    while (items.size() > 1) {
        next.clear();
        next.reserve(items.size() / 2 + 1);
        for (size_t i = 0; i + 1 < items.size(); i += 2)
            next.push_back(mul(items[i], items[i + 1]));
        if (items.size() & 1) next.push_back(std::move(items.back()));
        items.swap(next);
    }
    return std::move(items.front());
}

BigNat binomial(uint64_t n, uint64_t k, const PrimeTable& primes) {
    assert(k <= n);
    require_covers(primes, n);
    PrimeFactorization f = binomial_factorization(n, k, primes);
    std::vector<BigNat> leaves;
    leaves.reserve(f.factors.size());
    // kummer exponents keep p^r <= n, so each leaf fits a single limb
    for (const auto& [p, r] : f.factors) leaves.push_back(BigNat(pow_u64(p, r)));
    return product_tree(std::move(leaves));
}

BigNat factorial_iterative(uint64_t n) {
    BigNat acc(1);
    for (uint64_t i = 2; i <= n; ++i) acc.imul_u64(i);
    return acc;
}

BigNat factorial_schonhage(uint64_t n, const PrimeTable& primes) {
    require_covers(primes, n);
    if (n < 2) return BigNat(1);

    std::vector<std::pair<uint64_t, uint64_t>> exponents;  // (p, r_p)
    unsigned top_bit = 0;
    for (uint64_t p = 2; p <= n; ++p) {
        if (!primes.bits.test(p)) continue;
        uint64_t r = legendre_exponent(n, p);
        exponents.emplace_back(p, r);
        top_bit = std::max(top_bit, floor_log2(r));
    }

    BigNat acc(1);
    for (unsigned j = top_bit + 1; j-- > 0;) {
        std::vector<BigNat> group;
        for (const auto& [p, r] : exponents)
            if ((r >> j) & 1) group.push_back(BigNat(p));
        acc = square(acc);
        acc = mul(acc, product_tree(std::move(group)));
    }
    return acc;
}

BigNat factorial_vardi(uint64_t n, const PrimeTable& primes) {
    require_covers(primes, n);
    if (n < 64) return factorial_iterative(n);
    uint64_t half = n / 2;
    BigNat halffact = factorial_vardi(half, primes);
    BigNat result = mul(binomial(n, half, primes), square(halffact));
    if (n & 1) result.imul_u64(half + 1);  // ceil(n/2)^r, r = n mod 2
    return result;
}

}  // namespace primetab::numberkit
