#include "kz/buchberger.hpp"

#include <algorithm>
#include <set>

namespace kz {

namespace {

struct Item {
    VecElem f;
    int64_t sugar = 0;
};

int64_t wdeg(const Monomial& m, const MonomialOrder& o) { return m.wdegree(o.weights); }

// find first basis element whose lead divides (pos, m)
int find_reducer(const std::vector<Item>& basis, uint32_t pos, const Monomial& m, int skip) {
    for (size_t i = 0; i < basis.size(); ++i) {
        if (static_cast<int>(i) == skip) continue;
        const auto& lt = basis[i].f.lead();
        if (lt.pos == pos && lt.m.divides(m)) return static_cast<int>(i);
    }
    return -1;
}

// full reduction tracking sugar
VecElem reduce_full(VecElem f, int64_t& sugar, const std::vector<Item>& basis, const ModOrder& o,
                    int skip = -1) {
    const uint32_t p = f.ring->p;
    VecElem out(f.ring, f.rank);
    while (!f.is_zero()) {
        const VTerm lt = f.lead();
        int r = find_reducer(basis, lt.pos, lt.m, skip);
        if (r < 0) {
            out.terms.push_back(lt);
            f.terms.erase(f.terms.begin());
            continue;
        }
        const Item& g = basis[r];
        Monomial q = Monomial::quotient(lt.m, g.f.lead().m);
        uint32_t c = mod_mul(lt.c, mod_inv(g.f.lead().c, p), p);
        sugar = std::max(sugar, g.sugar + wdeg(q, o.mono));
        f = sub_scaled(f, c, q, g.f, o);
    }
    return out; // proper terms already in descending order
}

struct Pair {
    int64_t sugar;
    uint32_t pos;
    Monomial lcm;
    int i, j;
};

struct PairLess {
    const ModOrder* o;
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        Cmp c = vterm_compare(*o, a.pos, a.lcm, b.pos, b.lcm);
        if (c != Cmp::EQ) return c == Cmp::LT;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

int64_t pair_sugar(const std::vector<Item>& basis, int i, int j, const Monomial& lcm,
                   const ModOrder& o) {
    const auto& fi = basis[i].f.lead().m;
    const auto& fj = basis[j].f.lead().m;
    int64_t si = basis[i].sugar + wdeg(Monomial::quotient(lcm, fi), o.mono);
    int64_t sj = basis[j].sugar + wdeg(Monomial::quotient(lcm, fj), o.mono);
    return std::max(si, sj);
}

// Gebauer-Moeller update: add element k, prune new and old pairs
void update_pairs(std::multiset<Pair, PairLess>& pairs, const std::vector<Item>& basis, int k,
                  const ModOrder& o, bool rank_one) {
    const auto& lk = basis[k].f.lead();

    std::vector<Pair> fresh;
    for (int i = 0; i < k; ++i) {
        const auto& li = basis[i].f.lead();
        if (li.pos != lk.pos) continue;
        Pair pr;
        pr.pos = lk.pos;
        pr.lcm = Monomial::lcm(li.m, lk.m);
        pr.i = i;
        pr.j = k;
        pr.sugar = pair_sugar(basis, i, k, pr.lcm, o);
        fresh.push_back(std::move(pr));
    }

    // M: drop (i,k) when another new lcm strictly divides it
    std::vector<bool> keep(fresh.size(), true);
    for (size_t a = 0; a < fresh.size(); ++a) {
        if (!keep[a]) continue;
        for (size_t b = 0; b < fresh.size(); ++b) {
            if (a == b || !keep[b]) continue;
            if (fresh[b].lcm.divides(fresh[a].lcm) && !(fresh[b].lcm == fresh[a].lcm)) {
                keep[a] = false;
                break;
            }
        }
    }
    // F: one pair per lcm value
    for (size_t a = 0; a < fresh.size(); ++a) {
        if (!keep[a]) continue;
        for (size_t b = a + 1; b < fresh.size(); ++b) {
            if (keep[b] && fresh[b].lcm == fresh[a].lcm) keep[b] = false;
        }
    }
    // product criterion, ideals only
    if (rank_one) {
        for (size_t a = 0; a < fresh.size(); ++a) {
            if (!keep[a]) continue;
            const auto& li = basis[fresh[a].i].f.lead().m;
            if (li.coprime(lk.m)) keep[a] = false;
        }
    }

    // chain criterion on old pairs
    for (auto it = pairs.begin(); it != pairs.end();) {
        const Pair& pr = *it;
        const auto& li = basis[pr.i].f.lead();
        const auto& lj = basis[pr.j].f.lead();
        bool drop = false;
        if (pr.pos == lk.pos && lk.m.divides(pr.lcm)) {
            Monomial lik = Monomial::lcm(li.m, lk.m);
            Monomial ljk = Monomial::lcm(lj.m, lk.m);
            if (!(lik == pr.lcm) && !(ljk == pr.lcm)) drop = true;
        }
        it = drop ? pairs.erase(it) : std::next(it);
    }

    for (size_t a = 0; a < fresh.size(); ++a)
        if (keep[a]) pairs.insert(std::move(fresh[a]));
}

std::vector<VecElem> interreduce(std::vector<Item> basis, const ModOrder& o) {
    // minimal leads; for duplicated leads keep the first occurrence
    std::vector<Item> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        const auto& li = basis[i].f.lead();
        bool redundant = false;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            const auto& lj = basis[j].f.lead();
            if (lj.pos != li.pos || !lj.m.divides(li.m)) continue;
            if (!(lj.m == li.m) || j < i) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // tail reduction to fixpoint
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < minimal.size(); ++i) {
            int64_t s = minimal[i].sugar;
            VecElem nf = reduce_full(minimal[i].f, s, minimal, o, static_cast<int>(i));
            if (!(nf == minimal[i].f)) {
                minimal[i].f = std::move(nf);
                changed = true;
            }
        }
    }
    std::vector<VecElem> out;
    out.reserve(minimal.size());
    for (auto& it : minimal) out.push_back(it.f.monic());
    std::sort(out.begin(), out.end(), [&](const VecElem& a, const VecElem& b) {
        return vterm_compare(o, a.lead().pos, a.lead().m, b.lead().pos, b.lead().m) == Cmp::LT;
    });
    return out;
}

} // namespace

VecElem normal_form(VecElem f, const std::vector<VecElem>& basis, const ModOrder& o) {
    std::vector<Item> items;
    items.reserve(basis.size());
    for (const auto& g : basis)
        if (!g.is_zero()) items.push_back({g, g.wdegree()});
    int64_t s = 0;
    return reduce_full(std::move(f), s, items, o);
}

std::vector<VecElem> reduced_groebner(std::vector<VecElem> gens, const ModOrder& o,
                                      const Guards& guards) {
    std::vector<Item> basis;
    std::multiset<Pair, PairLess> pairs{PairLess{&o}};
    const bool rank_one = !gens.empty() && gens.front().rank == 1;

    for (auto& g : gens) {
        g.sort_normalize(o);
        if (g.is_zero()) continue;
        int64_t s = g.wdegree();
        VecElem nf = reduce_full(std::move(g), s, basis, o);
        if (nf.is_zero()) continue;
        basis.push_back({nf.monic(), s});
        update_pairs(pairs, basis, static_cast<int>(basis.size()) - 1, o, rank_one);
    }

    int64_t processed = 0;
    while (!pairs.empty()) {
        Pair pr = *pairs.begin();
        pairs.erase(pairs.begin());
        if (++processed > guards.max_pairs) throw GuardError("groebner: pair guard exceeded");

        const Item &a = basis[pr.i], &b = basis[pr.j];
        Monomial qa = Monomial::quotient(pr.lcm, a.f.lead().m);
        Monomial qb = Monomial::quotient(pr.lcm, b.f.lead().m);
        // both monic: S = qa*a - qb*b
        VecElem s = sub_scaled(a.f.mono_mul(qa, 1), 1, qb, b.f, o);
        int64_t sug = pr.sugar;
        VecElem nf = reduce_full(std::move(s), sug, basis, o);
        if (nf.is_zero()) continue;
        basis.push_back({nf.monic(), sug});
        update_pairs(pairs, basis, static_cast<int>(basis.size()) - 1, o, rank_one);
    }
    return interreduce(std::move(basis), o);
}

std::vector<VecElem> syzygy_generators(const std::vector<VecElem>& gens, const Guards& guards) {
    if (gens.empty()) return {};
    const RingPtr ring = gens.front().ring;
    const uint32_t r = gens.front().rank;
    const uint32_t s = static_cast<uint32_t>(gens.size());
    ModOrder o{ring->order, false};

    std::vector<VecElem> work;
    work.reserve(s);
    for (uint32_t i = 0; i < s; ++i) {
        if (gens[i].rank != r || !same_ring(gens[i].ring, ring))
            throw InputError("syzygy_generators: mixed ambient modules");
        VecElem e = gens[i].shifted(r + s, 0);
        e.terms.push_back({r + i, Monomial(ring->nvars()), 1});
        e.sort_normalize(o);
        work.push_back(std::move(e));
    }
    auto gb = reduced_groebner(std::move(work), o, guards);
    std::vector<VecElem> out;
    for (auto& g : gb) {
        if (g.lead().pos >= r) {
            // POT: lead in the tag block forces the whole element there
            out.push_back(g.slice(r, r + s));
        }
    }
    return out;
}

bool basis_equal(const std::vector<VecElem>& a, const std::vector<VecElem>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

} // namespace kz
