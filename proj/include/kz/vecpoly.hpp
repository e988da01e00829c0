#pragma once

#include <cstdint>
#include <vector>

#include "kz/poly.hpp"

namespace kz {

/// Module orders extend the ring order to free modules P^r. POT compares
/// position first with e_0 > e_1 > ...; the elim_first variant lets an
/// auxiliary-variable block dominate positions, which is what module
/// elimination (intersections, saturations) needs.
struct ModOrder {
    MonomialOrder mono;
    bool elim_first = false;
};

Cmp vterm_compare(const ModOrder& o, uint32_t pa, const Monomial& ma, uint32_t pb,
                  const Monomial& mb);

struct VTerm {
    uint32_t pos = 0;
    Monomial m;
    uint32_t c = 0;
};

/// Element of a free module P^r as a flat sorted term list (descending under
/// the active module order). rank is the ambient rank r.
struct VecElem {
    RingPtr ring;
    uint32_t rank = 0;
    std::vector<VTerm> terms;

    VecElem() = default;
    VecElem(RingPtr r, uint32_t rk) : ring(std::move(r)), rank(rk) {}

    bool is_zero() const { return terms.empty(); }
    const VTerm& lead() const { return terms.front(); }
    int64_t wdegree() const; // max weighted degree among terms, -1 if zero

    void sort_normalize(const ModOrder& o); // sort, fold duplicates, drop zeros

    static VecElem from_vector(const std::vector<Polynomial>& comps, const ModOrder& o);
    std::vector<Polynomial> to_vector() const;
    Polynomial component(uint32_t pos) const;
    Polynomial to_scalar() const; // rank-1 only

    static VecElem unit(const RingPtr& r, uint32_t rank, uint32_t pos);
    static VecElem from_poly(const Polynomial& f, uint32_t rank, uint32_t pos,
                             const ModOrder& o);

    VecElem mono_mul(const Monomial& m, uint32_t c) const;
    VecElem scaled(uint32_t c) const;
    VecElem monic() const;

    // re-embed into a module of larger rank, offsetting positions
    VecElem shifted(uint32_t new_rank, uint32_t offset) const;
    // keep positions [lo, hi), re-basing to 0; caller checks the rest is zero
    VecElem slice(uint32_t lo, uint32_t hi) const;
    bool supported_in(uint32_t lo, uint32_t hi) const;

    friend bool operator==(const VecElem& a, const VecElem& b);
};

// a - c*m*b merged under order o
VecElem sub_scaled(const VecElem& a, uint32_t c, const Monomial& m, const VecElem& b,
                   const ModOrder& o);
VecElem add(const VecElem& a, const VecElem& b, const ModOrder& o);

VecElem frobenius_power(const VecElem& f, uint64_t q, const ModOrder& o);

} // namespace kz
