#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "kz/buchberger.hpp"
#include "kz/poly.hpp"

namespace kz {

/// Ideal of P = F_p[x_1..x_v] with a lazily cached reduced Groebner basis
/// under the ring's order. The cache is write-once and shared across copies.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    const std::vector<Polynomial>& gb(const Guards& g = default_guards()) const;

    bool contains(const Polynomial& f, const Guards& g = default_guards()) const;
    bool is_zero_ideal(const Guards& g = default_guards()) const;
    bool is_unit_ideal(const Guards& g = default_guards()) const;

    friend bool equal(const Ideal& a, const Ideal& b); // compares reduced bases

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    struct Cache {
        std::once_flag once;
        std::vector<Polynomial> gb;
    };
    std::shared_ptr<Cache> cache_;
};

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens,
                                       const Guards& g = default_guards());
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gb);

/// ideal generated by the q-th powers of the generators, q a power of p
Ideal bracket_power(const Ideal& I, uint64_t q);

/// exact quotient g / f for f | g (g reduced to zero by f alone)
Polynomial divide_exact(const Polynomial& g, const Polynomial& f);

// single-auxiliary-variable elimination tricks
Ideal intersect(const Ideal& a, const Ideal& b, const Guards& g = default_guards());
Ideal colon(const Ideal& I, const Polynomial& f, const Guards& g = default_guards());
Ideal colon(const Ideal& I, const Ideal& J, const Guards& g = default_guards());
// (I : f^infinity) by Rabinowitsch elimination
Ideal saturate_element(const Ideal& I, const Polynomial& f,
                       const Guards& g = default_guards());
// (I : J^infinity) by iterated colon, stability detected by GB equality
Ideal saturation(const Ideal& I, const Ideal& J, const Guards& g = default_guards());

/// Krull dimension of P/I from the lead-term ideal (largest independent
/// variable set). I must be proper.
int krull_dim(const Ideal& I, const Guards& g = default_guards());

} // namespace kz
