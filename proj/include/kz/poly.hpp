#pragma once

#include <cstdint>
#include <vector>

#include "kz/field.hpp"
#include "kz/ring.hpp"

namespace kz {

struct Term {
    Monomial m;
    uint32_t c = 0; // reduced residue, never 0 for stored terms
};

/// Sparse polynomial over the ring's prime field. Terms are kept in strictly
/// descending order under the ring's monomial order, no zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, std::vector<Term> terms); // normalizes

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    const Term& lead() const { return terms_.front(); }
    uint32_t constant_term() const; // coefficient of 1
    int64_t degree() const;         // max plain total degree, -1 for 0
    int64_t wdegree() const;        // max weighted degree, -1 for 0
    bool is_homogeneous() const;    // all terms same weighted degree

    static Polynomial zero(const RingPtr& r) { return Polynomial(r); }
    static Polynomial constant(const RingPtr& r, int64_t c);
    static Polynomial variable(const RingPtr& r, size_t idx, uint32_t exp = 1);
    static Polynomial from_term(const RingPtr& r, Monomial m, uint32_t c);

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    Polynomial scaled(uint32_t c) const;                       // c * f
    Polynomial mono_mul(const Monomial& m, uint32_t c) const;  // c * m * f
    Polynomial monic() const;                                  // lead coeff 1

    // f - c*m*g, the reduction workhorse
    static Polynomial sub_scaled(const Polynomial& f, uint32_t c, const Monomial& m,
                                 const Polynomial& g);

private:
    RingPtr ring_;
    std::vector<Term> terms_;
    void normalize();
    friend void check_same_ring(const Polynomial& a, const Polynomial& b);
};

void check_same_ring(const Polynomial& a, const Polynomial& b);

/// f^q for q a power of the characteristic: exponent vectors scale by q,
/// coefficients are fixed since c^p = c in F_p.
Polynomial frobenius_power(const Polynomial& f, uint64_t q);

bool is_power_of(uint64_t q, uint32_t p);

// move a polynomial between rings with the same p whose variable lists are
// compatible (target has at least as many variables; missing exponents 0)
Polynomial lift_to_ring(const Polynomial& f, const RingPtr& target);
// inverse of lift: fails if f involves variables beyond target's
Polynomial restrict_to_ring(const Polynomial& f, const RingPtr& target);

} // namespace kz
