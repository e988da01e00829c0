#pragma once

#include <cstdint>

#include "kz/guards.hpp"

namespace kz {

inline uint32_t mod_add(uint32_t a, uint32_t b, uint32_t p) {
    uint32_t s = a + b;
    return s >= p ? s - p : s;
}

inline uint32_t mod_sub(uint32_t a, uint32_t b, uint32_t p) {
    return a >= b ? a - b : a + p - b;
}

inline uint32_t mod_neg(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }

inline uint32_t mod_mul(uint32_t a, uint32_t b, uint32_t p) {
    return static_cast<uint32_t>((uint64_t(a) * uint64_t(b)) % p);
}

uint32_t mod_pow(uint32_t a, uint64_t e, uint32_t p);
uint32_t mod_inv(uint32_t a, uint32_t p); // a != 0 mod p
bool is_prime_u32(uint64_t n);

// element of the prime field F_p, value always reduced into [0, p)
struct FieldElement {
    uint32_t value = 0;
    uint32_t p = 2;

    FieldElement() = default;
    FieldElement(int64_t v, uint32_t prime) : p(prime) {
        int64_t r = v % int64_t(prime);
        if (r < 0) r += prime;
        value = static_cast<uint32_t>(r);
    }

    bool is_zero() const { return value == 0; }

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        a.check(b);
        return raw(mod_add(a.value, b.value, a.p), a.p);
    }
    friend FieldElement operator-(FieldElement a, FieldElement b) {
        a.check(b);
        return raw(mod_sub(a.value, b.value, a.p), a.p);
    }
    friend FieldElement operator*(FieldElement a, FieldElement b) {
        a.check(b);
        return raw(mod_mul(a.value, b.value, a.p), a.p);
    }
    friend FieldElement operator/(FieldElement a, FieldElement b) {
        a.check(b);
        if (b.is_zero()) throw InputError("division by zero in F_p");
        return raw(mod_mul(a.value, mod_inv(b.value, a.p), a.p), a.p);
    }
    FieldElement operator-() const { return raw(mod_neg(value, p), p); }
    FieldElement inv() const {
        if (is_zero()) throw InputError("inverse of zero in F_p");
        return raw(mod_inv(value, p), p);
    }
    FieldElement pow(uint64_t e) const { return raw(mod_pow(value, e, p), p); }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.p == b.p && a.value == b.value;
    }

    static FieldElement raw(uint32_t v, uint32_t p) {
        FieldElement e;
        e.value = v;
        e.p = p;
        return e;
    }

private:
    void check(const FieldElement& o) const {
        if (p != o.p) throw InputError("field modulus mismatch");
    }
};

} // namespace kz
