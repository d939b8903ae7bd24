#pragma once
#include <cstdint>
#include <stdexcept>

namespace grmod {

// Arithmetic in Z/p for a prime p < 2^31.  Elements are uint32_t values in
// [0, p).  Inverses use Fermat exponentiation.
class PrimeField {
public:
    explicit PrimeField(uint32_t p = 32003) : p_(p) {
        if (p < 2) throw std::invalid_argument("field modulus must be >= 2");
    }

    uint32_t p() const { return p_; }

    uint32_t reduce(int64_t a) const {
        int64_t r = a % static_cast<int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<uint32_t>(r);
    }

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }

    uint32_t sub(uint32_t a, uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }

    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }

    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
    }

    uint32_t pow(uint32_t a, uint64_t e) const {
        uint32_t r = 1 % p_;
        uint32_t base = a % p_;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    uint32_t inv(uint32_t a) const {
        if (a % p_ == 0) throw std::domain_error("inverse of zero");
        return pow(a, p_ - 2);
    }

    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    uint32_t p_;
};

} // namespace grmod
