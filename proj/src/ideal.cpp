#include "kz/ideal.hpp"

#include <algorithm>

namespace kz {

namespace {

ModOrder ring_order(const RingPtr& r) { return ModOrder{r->order, false}; }

std::vector<VecElem> to_vec(const RingPtr& ring, const std::vector<Polynomial>& polys) {
    ModOrder o = ring_order(ring);
    std::vector<VecElem> out;
    out.reserve(polys.size());
    for (const auto& f : polys) {
        if (!same_ring(f.ring(), ring)) throw InputError("ideal: ring mismatch");
        out.push_back(VecElem::from_poly(f, 1, 0, o));
    }
    return out;
}

std::vector<Polynomial> to_polys(const std::vector<VecElem>& vs) {
    std::vector<Polynomial> out;
    out.reserve(vs.size());
    for (const auto& v : vs) out.push_back(v.to_scalar());
    return out;
}

} // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
    for (const auto& f : gens_)
        if (!same_ring(f.ring(), ring_)) throw InputError("ideal generator ring mismatch");
}

const std::vector<Polynomial>& Ideal::gb(const Guards& g) const {
    std::call_once(cache_->once, [&] {
        cache_->gb = groebner_basis(gens_, g);
    });
    return cache_->gb;
}

bool Ideal::contains(const Polynomial& f, const Guards& g) const {
    return normal_form(f, gb(g)).is_zero();
}

bool Ideal::is_zero_ideal(const Guards& g) const { return gb(g).empty(); }

bool Ideal::is_unit_ideal(const Guards& g) const {
    const auto& b = gb(g);
    return b.size() == 1 && !b.front().is_zero() && b.front().lead().m.is_one();
}

bool equal(const Ideal& a, const Ideal& b) {
    if (!same_ring(a.ring(), b.ring())) return false;
    const auto &ga = a.gb(), &gb_ = b.gb();
    if (ga.size() != gb_.size()) return false;
    for (size_t i = 0; i < ga.size(); ++i)
        if (!(ga[i] == gb_[i])) return false;
    return true;
}

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens, const Guards& g) {
    if (gens.empty()) return {};
    const RingPtr ring = gens.front().ring();
    auto gb = reduced_groebner(to_vec(ring, gens), ring_order(ring), g);
    return to_polys(gb);
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gb) {
    if (gb.empty()) return f;
    const RingPtr ring = f.ring();
    ModOrder o = ring_order(ring);
    VecElem v = VecElem::from_poly(f, 1, 0, o);
    return normal_form(std::move(v), to_vec(ring, gb), o).to_scalar();
}

Ideal bracket_power(const Ideal& I, uint64_t q) {
    std::vector<Polynomial> gens;
    gens.reserve(I.gens().size());
    for (const auto& f : I.gens()) gens.push_back(frobenius_power(f, q));
    return Ideal(I.ring(), std::move(gens));
}

Polynomial divide_exact(const Polynomial& g, const Polynomial& f) {
    if (f.is_zero()) throw InputError("divide_exact: division by zero");
    const RingPtr ring = g.ring();
    const uint32_t p = ring->p;
    Polynomial rem = g;
    Polynomial quot(ring);
    uint32_t lc_inv = mod_inv(f.lead().c, p);
    while (!rem.is_zero()) {
        const Term& lt = rem.lead();
        if (!f.lead().m.divides(lt.m))
            throw InputError("divide_exact: not divisible");
        Monomial q = Monomial::quotient(lt.m, f.lead().m);
        uint32_t c = mod_mul(lt.c, lc_inv, p);
        quot = quot + Polynomial::from_term(ring, q, c);
        rem = Polynomial::sub_scaled(rem, c, q, f);
    }
    return quot;
}

namespace {

// keep GB elements free of the elimination block, mapped back to the base ring
std::vector<Polynomial> eliminate_aux(const RingPtr& base, const RingPtr& ext,
                                      std::vector<Polynomial> gens, const Guards& g) {
    std::vector<VecElem> vs = to_vec(ext, gens);
    auto gb = reduced_groebner(std::move(vs), ring_order(ext), g);
    std::vector<Polynomial> out;
    for (const auto& v : gb) {
        const Monomial& lead = v.lead().m;
        bool aux_free = true;
        for (size_t i = base->nvars(); i < ext->nvars(); ++i)
            if (lead.e[i]) aux_free = false;
        if (aux_free) out.push_back(restrict_to_ring(v.to_scalar(), base));
    }
    return out;
}

} // namespace

Ideal intersect(const Ideal& a, const Ideal& b, const Guards& g) {
    const RingPtr base = a.ring();
    RingPtr ext = extend_ring(base, 1);
    Polynomial t = Polynomial::variable(ext, base->nvars());
    Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens()) gens.push_back(t * lift_to_ring(f, ext));
    for (const auto& f : b.gens()) gens.push_back(one_minus_t * lift_to_ring(f, ext));
    return Ideal(base, eliminate_aux(base, ext, std::move(gens), g));
}

Ideal colon(const Ideal& I, const Polynomial& f, const Guards& g) {
    if (f.is_zero()) throw InputError("colon: divisor must be non-zero");
    const RingPtr base = I.ring();
    // (I : f) = (I cap (f)) / f via elimination of one auxiliary variable
    Ideal inter = intersect(I, Ideal(base, {f}), g);
    std::vector<Polynomial> out;
    out.reserve(inter.gens().size());
    for (const auto& h : inter.gens()) out.push_back(divide_exact(h, f));
    return Ideal(base, std::move(out));
}

Ideal colon(const Ideal& I, const Ideal& J, const Guards& g) {
    if (J.gens().empty()) throw InputError("colon: empty divisor ideal");
    bool first = true;
    Ideal acc;
    for (const auto& f : J.gens()) {
        if (f.is_zero()) continue;
        Ideal c = colon(I, f, g);
        acc = first ? c : intersect(acc, c, g);
        first = false;
    }
    if (first) throw InputError("colon: divisor ideal is zero");
    return acc;
}

Ideal saturate_element(const Ideal& I, const Polynomial& f, const Guards& g) {
    if (f.is_zero()) throw InputError("saturate_element: divisor must be non-zero");
    const RingPtr base = I.ring();
    RingPtr ext = extend_ring(base, 1);
    Polynomial t = Polynomial::variable(ext, base->nvars());
    std::vector<Polynomial> gens;
    for (const auto& h : I.gens()) gens.push_back(lift_to_ring(h, ext));
    gens.push_back(Polynomial::constant(ext, 1) - t * lift_to_ring(f, ext));
    return Ideal(base, eliminate_aux(base, ext, std::move(gens), g));
}

Ideal saturation(const Ideal& I, const Ideal& J, const Guards& g) {
    Ideal cur = I;
    for (int it = 0; it < g.max_sat_iter; ++it) {
        Ideal next = colon(cur, J, g);
        if (equal(next, cur)) return Ideal(cur.ring(), cur.gb(g));
        cur = next;
    }
    throw GuardError("saturation: iteration guard exceeded");
}

int krull_dim(const Ideal& I, const Guards& g) {
    const auto& basis = I.gb(g);
    const size_t v = I.ring()->nvars();
    if (!basis.empty() && basis.front().lead().m.is_one())
        throw InputError("krull_dim: unit ideal");
    std::vector<Monomial> leads;
    leads.reserve(basis.size());
    for (const auto& f : basis) leads.push_back(f.lead().m);

    int best = 0;
    // independent subsets S: no lead monomial supported inside S
    for (uint64_t mask = 0; mask < (1ull << v); ++mask) {
        bool indep = true;
        for (const auto& m : leads) {
            bool inside = true;
            for (size_t i = 0; i < v; ++i)
                if (m.e[i] && !(mask & (1ull << i))) inside = false;
            if (inside) {
                indep = false;
                break;
            }
        }
        if (indep) best = std::max(best, __builtin_popcountll(mask));
    }
    return best;
}

} // namespace kz
