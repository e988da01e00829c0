#include "kz/submodule.hpp"

#include "kz/matrix.hpp"

namespace kz {

namespace {
ModOrder pot(const RingPtr& r) { return ModOrder{r->order, false}; }
ModOrder elim_pot(const RingPtr& ext) { return ModOrder{ext->order, true}; }
} // namespace

Submodule::Submodule(RingPtr ring, uint32_t rank, std::vector<VecElem> gens)
    : ring_(std::move(ring)), rank_(rank), gens_(std::move(gens)),
      cache_(std::make_shared<Cache>()) {
    ModOrder o = pot(ring_);
    for (auto& g : gens_) {
        if (!same_ring(g.ring, ring_)) throw InputError("submodule generator ring mismatch");
        if (g.rank != rank_) throw InputError("submodule generator rank mismatch");
        g.sort_normalize(o);
    }
}

const std::vector<VecElem>& Submodule::gb(const Guards& g) const {
    std::call_once(cache_->once, [&] {
        cache_->gb = reduced_groebner(gens_, pot(ring_), g);
    });
    return cache_->gb;
}

bool Submodule::contains(const VecElem& w, const Guards& g) const {
    return normal_form(w, gb(g), pot(ring_)).is_zero();
}

bool Submodule::contains(const Submodule& other, const Guards& g) const {
    for (const auto& w : other.gens())
        if (!contains(w, g)) return false;
    return true;
}

bool equal(const Submodule& a, const Submodule& b) {
    if (!same_ring(a.ring(), b.ring()) || a.rank() != b.rank()) return false;
    return basis_equal(a.gb(), b.gb());
}

Submodule syzygies(const PolyMatrix& A, const Guards& g) {
    // relations among the rows of A
    PolyMatrix t = A.transposed();
    auto gens = syzygy_generators(t.columns(), g);
    return Submodule(A.ring(), static_cast<uint32_t>(A.rows()), std::move(gens));
}

Submodule colon(const Submodule& K, const Polynomial& f, const Guards& g) {
    if (f.is_zero()) throw InputError("colon: divisor must be non-zero");
    const RingPtr ring = K.ring();
    const uint32_t r = K.rank();
    ModOrder o = pot(ring);
    // syzygies of [f*e_i | K gens]; first r coordinates give (K : f)
    std::vector<VecElem> cols;
    for (uint32_t i = 0; i < r; ++i) cols.push_back(VecElem::from_poly(f, r, i, o));
    for (const auto& k : K.gens()) cols.push_back(k);
    auto syz = syzygy_generators(cols, g);
    std::vector<VecElem> out;
    for (const auto& s : syz) {
        VecElem w = s.slice(0, r);
        w.ring = ring;
        if (!w.is_zero()) out.push_back(std::move(w));
    }
    return Submodule(ring, r, std::move(out));
}

Submodule colon(const Submodule& K, const Ideal& J, const Guards& g) {
    const RingPtr ring = K.ring();
    const uint32_t r = K.rank();
    std::vector<Polynomial> js;
    for (const auto& f : J.gens())
        if (!f.is_zero()) js.push_back(f);
    if (js.empty()) throw InputError("colon: divisor ideal is zero");
    const uint32_t t = static_cast<uint32_t>(js.size());
    ModOrder o = pot(ring);

    // kernel of P^r -> (P^r/K)^t, e_i -> (g_l e_i)_l, via one syzygy run
    const uint32_t big = t * r;
    std::vector<VecElem> cols;
    for (uint32_t i = 0; i < r; ++i) {
        VecElem v(ring, big);
        for (uint32_t l = 0; l < t; ++l)
            for (const auto& term : js[l].terms()) v.terms.push_back({l * r + i, term.m, term.c});
        v.sort_normalize(o);
        cols.push_back(std::move(v));
    }
    for (uint32_t l = 0; l < t; ++l)
        for (const auto& k : K.gens()) cols.push_back(k.shifted(big, l * r));
    auto syz = syzygy_generators(cols, g);
    std::vector<VecElem> out;
    for (const auto& s : syz) {
        VecElem w = s.slice(0, r);
        w.ring = ring;
        if (!w.is_zero()) out.push_back(std::move(w));
    }
    return Submodule(ring, r, std::move(out));
}

namespace {

// map submodule gens into the extended ring, multiplied by factor
std::vector<VecElem> lift_gens(const std::vector<VecElem>& gens, const RingPtr& ext,
                               const Polynomial& factor, const ModOrder& o) {
    std::vector<VecElem> out;
    out.reserve(gens.size());
    for (const auto& v : gens) {
        VecElem w(ext, v.rank);
        for (const auto& t : v.terms) {
            Monomial m(ext->nvars());
            std::copy(t.m.e.begin(), t.m.e.end(), m.e.begin());
            for (const auto& ft : factor.terms())
                w.terms.push_back({t.pos, m * ft.m, mod_mul(t.c, ft.c, ext->p)});
        }
        w.sort_normalize(o);
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<VecElem> strip_aux(const std::vector<VecElem>& gb, const RingPtr& base,
                               uint32_t rank) {
    ModOrder o = pot(base);
    std::vector<VecElem> out;
    for (const auto& v : gb) {
        bool aux_free = true;
        for (size_t i = base->nvars(); i < v.lead().m.e.size() && aux_free; ++i)
            if (v.lead().m.e[i]) aux_free = false;
        if (!aux_free) continue;
        VecElem w(base, rank);
        for (const auto& t : v.terms) {
            for (size_t i = base->nvars(); i < t.m.e.size(); ++i)
                if (t.m.e[i]) throw Error("strip_aux: tail involves auxiliary variable");
            Monomial m(std::vector<uint32_t>(t.m.e.begin(), t.m.e.begin() + base->nvars()));
            w.terms.push_back({t.pos, std::move(m), t.c});
        }
        w.sort_normalize(o);
        out.push_back(std::move(w));
    }
    return out;
}

} // namespace

Submodule intersect(const Submodule& a, const Submodule& b, const Guards& g) {
    if (a.rank() != b.rank()) throw InputError("intersect: rank mismatch");
    const RingPtr base = a.ring();
    RingPtr ext = extend_ring(base, 1);
    ModOrder o = elim_pot(ext);
    Polynomial t = Polynomial::variable(ext, base->nvars());
    Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
    std::vector<VecElem> gens = lift_gens(a.gens(), ext, t, o);
    auto more = lift_gens(b.gens(), ext, one_minus_t, o);
    gens.insert(gens.end(), more.begin(), more.end());
    auto gb = reduced_groebner(std::move(gens), o, g);
    return Submodule(base, a.rank(), strip_aux(gb, base, a.rank()));
}

Submodule saturate_element(const Submodule& K, const Polynomial& f, const Guards& g) {
    if (f.is_zero()) throw InputError("saturate_element: divisor must be non-zero");
    const RingPtr base = K.ring();
    RingPtr ext = extend_ring(base, 1);
    ModOrder o = elim_pot(ext);
    Polynomial one = Polynomial::constant(ext, 1);
    Polynomial tf = Polynomial::variable(ext, base->nvars()) * lift_to_ring(f, ext);
    std::vector<VecElem> gens = lift_gens(K.gens(), ext, one, o);
    Polynomial u = one - tf;
    for (uint32_t i = 0; i < K.rank(); ++i) gens.push_back(VecElem::from_poly(u, K.rank(), i, o));
    auto gb = reduced_groebner(std::move(gens), o, g);
    return Submodule(base, K.rank(), strip_aux(gb, base, K.rank()));
}

Submodule saturation(const Submodule& K, const Ideal& J, const Guards& g) {
    Submodule cur = K;
    for (int it = 0; it < g.max_sat_iter; ++it) {
        Submodule next = colon(cur, J, g);
        if (equal(next, cur)) return Submodule(cur.ring(), cur.rank(), cur.gb(g));
        cur = next;
    }
    throw GuardError("saturation: iteration guard exceeded");
}

Submodule saturate_at_origin(const Submodule& K, const Guards& g) {
    const RingPtr ring = K.ring();
    Submodule acc;
    for (size_t i = 0; i < ring->nvars(); ++i) {
        Submodule si = saturate_element(K, Polynomial::variable(ring, i), g);
        acc = (i == 0) ? si : intersect(acc, si, g);
    }
    return acc;
}

} // namespace kz
