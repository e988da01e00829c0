#include "kz/vecpoly.hpp"

#include <algorithm>

namespace kz {

Cmp vterm_compare(const ModOrder& o, uint32_t pa, const Monomial& ma, uint32_t pb,
                  const Monomial& mb) {
    if (o.elim_first && o.mono.elim_split < ma.e.size()) {
        int64_t da = 0, db = 0;
        for (size_t i = o.mono.elim_split; i < ma.e.size(); ++i) {
            da += ma.e[i];
            db += mb.e[i];
        }
        if (da != db) return da < db ? Cmp::LT : Cmp::GT;
    }
    if (pa != pb) return pa < pb ? Cmp::GT : Cmp::LT;
    return order_compare(o.mono, ma, mb);
}

int64_t VecElem::wdegree() const {
    int64_t d = -1;
    for (const auto& t : terms) d = std::max(d, t.m.wdegree(ring->order.weights));
    return d;
}

void VecElem::sort_normalize(const ModOrder& o) {
    const uint32_t p = ring->p;
    for (auto& t : terms) t.c %= p;
    std::sort(terms.begin(), terms.end(), [&](const VTerm& a, const VTerm& b) {
        return vterm_compare(o, a.pos, a.m, b.pos, b.m) == Cmp::GT;
    });
    std::vector<VTerm> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().pos == t.pos && out.back().m == t.m)
            out.back().c = mod_add(out.back().c, t.c, p);
        else
            out.push_back(std::move(t));
    }
    terms.clear();
    for (auto& t : out)
        if (t.c) terms.push_back(std::move(t));
}

VecElem VecElem::from_vector(const std::vector<Polynomial>& comps, const ModOrder& o) {
    if (comps.empty()) throw InputError("from_vector: empty component list");
    VecElem v(comps.front().ring(), static_cast<uint32_t>(comps.size()));
    for (uint32_t i = 0; i < comps.size(); ++i) {
        check_same_ring(comps.front(), comps[i]);
        for (const auto& t : comps[i].terms()) v.terms.push_back({i, t.m, t.c});
    }
    v.sort_normalize(o);
    return v;
}

std::vector<Polynomial> VecElem::to_vector() const {
    std::vector<std::vector<Term>> comps(rank);
    for (const auto& t : terms) comps[t.pos].push_back({t.m, t.c});
    std::vector<Polynomial> out;
    out.reserve(rank);
    for (auto& c : comps) out.emplace_back(ring, std::move(c));
    return out;
}

Polynomial VecElem::component(uint32_t pos) const {
    std::vector<Term> ts;
    for (const auto& t : terms)
        if (t.pos == pos) ts.push_back({t.m, t.c});
    return Polynomial(ring, std::move(ts));
}

Polynomial VecElem::to_scalar() const {
    if (rank != 1) throw InputError("to_scalar: rank must be 1");
    return component(0);
}

VecElem VecElem::unit(const RingPtr& r, uint32_t rank, uint32_t pos) {
    VecElem v(r, rank);
    v.terms.push_back({pos, Monomial(r->nvars()), 1});
    return v;
}

VecElem VecElem::from_poly(const Polynomial& f, uint32_t rank, uint32_t pos, const ModOrder& o) {
    VecElem v(f.ring(), rank);
    for (const auto& t : f.terms()) v.terms.push_back({pos, t.m, t.c});
    v.sort_normalize(o);
    return v;
}

VecElem VecElem::mono_mul(const Monomial& m, uint32_t c) const {
    VecElem r(ring, rank);
    c %= ring->p;
    if (!c) return r;
    r.terms.reserve(terms.size());
    for (const auto& t : terms) r.terms.push_back({t.pos, t.m * m, mod_mul(t.c, c, ring->p)});
    return r; // multiplying by a monomial preserves term order
}

VecElem VecElem::scaled(uint32_t c) const {
    VecElem r(ring, rank);
    c %= ring->p;
    if (!c) return r;
    r.terms = terms;
    for (auto& t : r.terms) t.c = mod_mul(t.c, c, ring->p);
    return r;
}

VecElem VecElem::monic() const {
    if (is_zero()) return *this;
    return scaled(mod_inv(lead().c, ring->p));
}

VecElem VecElem::shifted(uint32_t new_rank, uint32_t offset) const {
    VecElem r(ring, new_rank);
    r.terms = terms;
    for (auto& t : r.terms) t.pos += offset;
    return r;
}

VecElem VecElem::slice(uint32_t lo, uint32_t hi) const {
    VecElem r(ring, hi - lo);
    for (const auto& t : terms)
        if (t.pos >= lo && t.pos < hi) r.terms.push_back({t.pos - lo, t.m, t.c});
    return r;
}

bool VecElem::supported_in(uint32_t lo, uint32_t hi) const {
    for (const auto& t : terms)
        if (t.pos < lo || t.pos >= hi) return false;
    return true;
}

bool operator==(const VecElem& a, const VecElem& b) {
    if (a.rank != b.rank || a.terms.size() != b.terms.size()) return false;
    for (size_t i = 0; i < a.terms.size(); ++i) {
        if (a.terms[i].pos != b.terms[i].pos || !(a.terms[i].m == b.terms[i].m) ||
            a.terms[i].c != b.terms[i].c)
            return false;
    }
    return true;
}

VecElem sub_scaled(const VecElem& a, uint32_t c, const Monomial& m, const VecElem& b,
                   const ModOrder& o) {
    const uint32_t p = a.ring->p;
    VecElem out(a.ring, a.rank);
    out.terms.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        Monomial bm = b.terms[j].m * m;
        Cmp cmp = vterm_compare(o, a.terms[i].pos, a.terms[i].m, b.terms[j].pos, bm);
        if (cmp == Cmp::GT) {
            out.terms.push_back(a.terms[i++]);
        } else if (cmp == Cmp::LT) {
            uint32_t v = mod_neg(mod_mul(b.terms[j].c, c, p), p);
            out.terms.push_back({b.terms[j].pos, std::move(bm), v});
            ++j;
        } else {
            uint32_t v = mod_sub(a.terms[i].c, mod_mul(b.terms[j].c, c, p), p);
            if (v) out.terms.push_back({a.terms[i].pos, a.terms[i].m, v});
            ++i;
            ++j;
        }
    }
    for (; i < a.terms.size(); ++i) out.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) {
        uint32_t v = mod_neg(mod_mul(b.terms[j].c, c, p), p);
        out.terms.push_back({b.terms[j].pos, b.terms[j].m * m, v});
    }
    return out;
}

VecElem add(const VecElem& a, const VecElem& b, const ModOrder& o) {
    Monomial one(a.ring->nvars());
    return sub_scaled(a, a.ring->p - 1, one, b, o);
}

VecElem frobenius_power(const VecElem& f, uint64_t q, const ModOrder& o) {
    if (!is_power_of(q, f.ring->p))
        throw InputError("frobenius_power: q must be a power of the characteristic");
    VecElem r(f.ring, f.rank);
    r.terms.reserve(f.terms.size());
    for (const auto& t : f.terms) r.terms.push_back({t.pos, t.m.pow_scale(q), t.c});
    r.sort_normalize(o);
    return r;
}

} // namespace kz
