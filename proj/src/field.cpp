#include "kz/field.hpp"

namespace kz {

Guards& default_guards() {
    static Guards g;
    return g;
}

uint32_t mod_pow(uint32_t a, uint64_t e, uint32_t p) {
    uint64_t base = a % p, acc = 1;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(acc);
}

uint32_t mod_inv(uint32_t a, uint32_t p) {
    // extended euclid on (a, p)
    int64_t t = 0, new_t = 1;
    int64_t r = p, new_r = a % p;
    while (new_r != 0) {
        int64_t q = r / new_r;
        int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw InputError("mod_inv: not invertible");
    if (t < 0) t += p;
    return static_cast<uint32_t>(t);
}

bool is_prime_u32(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace kz
