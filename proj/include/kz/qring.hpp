#pragma once

#include <memory>

#include "kz/ideal.hpp"
#include "kz/vecpoly.hpp"

namespace kz {

/// Ambient model R = P/I_R localized at the origin. Quotient generators must
/// vanish at the origin so that constant terms detect local units.
class QuotientRing {
public:
    QuotientRing(RingPtr ring, std::vector<Polynomial> qgens,
                 const Guards& g = default_guards());

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& qgens() const { return qgens_; }
    const Ideal& qideal() const { return qideal_; }
    const std::vector<Polynomial>& qgb() const { return qideal_.gb(); }
    bool is_polynomial_ring() const { return qgens_.empty(); }
    int dim() const { return dim_; } // Krull dimension of R

    Polynomial nf(const Polynomial& f) const; // canonical representative mod I_R
    VecElem nf(const VecElem& v) const;       // componentwise

    // generators g*e_i of the submodule I_R * P^rank
    std::vector<VecElem> block(uint32_t rank) const;

private:
    RingPtr ring_;
    std::vector<Polynomial> qgens_;
    Ideal qideal_;
    int dim_ = 0;
};

using QRPtr = std::shared_ptr<const QuotientRing>;

QRPtr make_quotient_ring(RingPtr ring, std::vector<Polynomial> qgens,
                         const Guards& g = default_guards());

} // namespace kz
