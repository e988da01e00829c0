#include "kz/qring.hpp"

namespace kz {

QuotientRing::QuotientRing(RingPtr ring, std::vector<Polynomial> qgens, const Guards& g)
    : ring_(std::move(ring)) {
    for (auto& f : qgens) {
        if (!same_ring(f.ring(), ring_)) throw InputError("quotient generator ring mismatch");
        if (f.is_zero()) continue;
        if (f.constant_term() != 0)
            throw InputError("quotient generator must vanish at the origin");
        qgens_.push_back(std::move(f));
    }
    qideal_ = Ideal(ring_, qgens_);
    if (qideal_.is_unit_ideal(g)) throw InputError("quotient ideal is the unit ideal");
    dim_ = krull_dim(qideal_, g);
}

Polynomial QuotientRing::nf(const Polynomial& f) const {
    if (qgens_.empty()) return f;
    return normal_form(f, qgb());
}

VecElem QuotientRing::nf(const VecElem& v) const {
    if (qgens_.empty()) return v;
    ModOrder o{ring_->order, false};
    VecElem out(v.ring, v.rank);
    auto comps = v.to_vector();
    for (uint32_t i = 0; i < comps.size(); ++i) {
        Polynomial r = normal_form(comps[i], qgb());
        for (const auto& t : r.terms()) out.terms.push_back({i, t.m, t.c});
    }
    out.sort_normalize(o);
    return out;
}

std::vector<VecElem> QuotientRing::block(uint32_t rank) const {
    ModOrder o{ring_->order, false};
    std::vector<VecElem> out;
    out.reserve(qgens_.size() * rank);
    for (const auto& g : qgens_)
        for (uint32_t i = 0; i < rank; ++i) out.push_back(VecElem::from_poly(g, rank, i, o));
    return out;
}

QRPtr make_quotient_ring(RingPtr ring, std::vector<Polynomial> qgens, const Guards& g) {
    return std::make_shared<QuotientRing>(std::move(ring), std::move(qgens), g);
}

} // namespace kz
