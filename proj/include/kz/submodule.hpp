#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "kz/buchberger.hpp"
#include "kz/ideal.hpp"

namespace kz {

/// Submodule of a free module P^r with cached reduced Groebner basis under
/// the position-over-term extension of the ring order.
class Submodule {
public:
    Submodule() = default;
    Submodule(RingPtr ring, uint32_t rank, std::vector<VecElem> gens);

    const RingPtr& ring() const { return ring_; }
    uint32_t rank() const { return rank_; }
    const std::vector<VecElem>& gens() const { return gens_; }
    const std::vector<VecElem>& gb(const Guards& g = default_guards()) const;

    bool contains(const VecElem& w, const Guards& g = default_guards()) const;
    bool contains(const Submodule& other, const Guards& g = default_guards()) const;

    friend bool equal(const Submodule& a, const Submodule& b);

private:
    RingPtr ring_;
    uint32_t rank_ = 0;
    std::vector<VecElem> gens_;
    struct Cache {
        std::once_flag once;
        std::vector<VecElem> gb;
    };
    std::shared_ptr<Cache> cache_;
};

/// Row-kernel of a matrix of polynomials: all row vectors w with w*A = 0.
/// The returned submodule lives in P^rows(A).
class PolyMatrix;
Submodule syzygies(const PolyMatrix& A, const Guards& g = default_guards());

// kernel-style colon and saturation; all results are generator lists
Submodule colon(const Submodule& K, const Polynomial& f, const Guards& g = default_guards());
Submodule colon(const Submodule& K, const Ideal& J, const Guards& g = default_guards());
Submodule intersect(const Submodule& a, const Submodule& b,
                    const Guards& g = default_guards());
Submodule saturate_element(const Submodule& K, const Polynomial& f,
                           const Guards& g = default_guards());
Submodule saturation(const Submodule& K, const Ideal& J, const Guards& g = default_guards());
/// (K : m^infinity) as the intersection of per-variable saturations; the
/// fast path behind every torsion-length computation
Submodule saturate_at_origin(const Submodule& K, const Guards& g = default_guards());

} // namespace kz
