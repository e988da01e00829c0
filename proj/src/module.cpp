#include "kz/module.hpp"

#include <algorithm>
#include <functional>

namespace kz {

namespace {
ModOrder pot(const RingPtr& r) { return ModOrder{r->order, false}; }
} // namespace

PresentedModule make_module(const QRPtr& qr, uint32_t rank, std::vector<VecElem> rel_gens) {
    PresentedModule M;
    M.qr = qr;
    M.rank = rank;
    std::vector<VecElem> gens;
    gens.reserve(rel_gens.size() + qr->qgens().size() * rank);
    for (auto& v : rel_gens) {
        if (v.rank != rank) throw InputError("relation rank mismatch");
        VecElem w = qr->nf(v);
        if (!w.is_zero()) gens.push_back(std::move(w));
    }
    auto blk = qr->block(rank);
    gens.insert(gens.end(), blk.begin(), blk.end());
    M.relations = Submodule(qr->ring(), rank, std::move(gens));
    return M;
}

PresentedModule cyclic_module(const QRPtr& qr, const std::vector<Polynomial>& ideal_gens) {
    ModOrder o = pot(qr->ring());
    std::vector<VecElem> gens;
    gens.reserve(ideal_gens.size());
    for (const auto& f : ideal_gens) gens.push_back(VecElem::from_poly(f, 1, 0, o));
    return make_module(qr, 1, std::move(gens));
}

PresentedModule cokernel_module(const QRPtr& qr, const PolyMatrix& A) {
    return make_module(qr, static_cast<uint32_t>(A.rows()), A.columns());
}

PresentedModule free_module(const QRPtr& qr, uint32_t rank) {
    return make_module(qr, rank, {});
}

std::vector<VecElem> kernel_into_quotient(const std::vector<VecElem>& targets,
                                          const std::vector<VecElem>& K_gens, uint32_t ambient,
                                          const Guards& g) {
    const uint32_t s = static_cast<uint32_t>(targets.size());
    if (s == 0) return {};
    std::vector<VecElem> cols;
    cols.reserve(targets.size() + K_gens.size());
    for (const auto& t : targets) {
        if (t.rank != ambient) throw InputError("kernel_into_quotient: rank mismatch");
        cols.push_back(t);
    }
    for (const auto& k : K_gens) cols.push_back(k);
    auto syz = syzygy_generators(cols, g);
    std::vector<VecElem> out;
    for (const auto& v : syz) {
        VecElem w = v.slice(0, s);
        if (!w.is_zero()) out.push_back(std::move(w));
    }
    return out;
}

PresentedModule generators_module(const QRPtr& qr, uint32_t ambient_rank,
                                  std::vector<VecElem> gens, const Guards& g) {
    std::vector<VecElem> kept;
    for (auto& v : gens) {
        if (v.rank != ambient_rank) throw InputError("generators_module: rank mismatch");
        VecElem w = qr->nf(v);
        if (!w.is_zero()) kept.push_back(std::move(w));
    }
    const uint32_t s = static_cast<uint32_t>(kept.size());
    if (s == 0) return make_module(qr, 0, {});
    auto rel = kernel_into_quotient(kept, qr->block(ambient_rank), ambient_rank, g);
    return make_module(qr, s, std::move(rel));
}

PresentedModule ideal_as_module(const QRPtr& qr, const std::vector<Polynomial>& gens,
                                const Guards& g) {
    ModOrder o = pot(qr->ring());
    std::vector<VecElem> vs;
    vs.reserve(gens.size());
    for (const auto& f : gens) vs.push_back(VecElem::from_poly(f, 1, 0, o));
    return generators_module(qr, 1, std::move(vs), g);
}

bool lead_module_zero_dimensional(const std::vector<VecElem>& gb, uint32_t rank, size_t nvars) {
    for (uint32_t j = 0; j < rank; ++j) {
        bool unit = false;
        std::vector<const Monomial*> leads;
        for (const auto& v : gb)
            if (v.lead().pos == j) {
                if (v.lead().m.is_one()) unit = true;
                leads.push_back(&v.lead().m);
            }
        if (unit) continue;
        for (size_t i = 0; i < nvars; ++i) {
            bool pure = false;
            for (const auto* m : leads) {
                if (m->e[i] == 0) continue;
                bool only_i = true;
                for (size_t k = 0; k < nvars; ++k)
                    if (k != i && m->e[k]) only_i = false;
                if (only_i) {
                    pure = true;
                    break;
                }
            }
            if (!pure) return false;
        }
    }
    return true;
}

int64_t count_standard_monomials(const std::vector<VecElem>& gb, uint32_t rank, size_t nvars) {
    int64_t total = 0;
    for (uint32_t j = 0; j < rank; ++j) {
        bool unit = false;
        std::vector<Monomial> leads;
        for (const auto& v : gb)
            if (v.lead().pos == j) {
                if (v.lead().m.is_one()) unit = true;
                leads.push_back(v.lead().m);
            }
        if (unit) continue;
        std::vector<uint32_t> box(nvars, 0);
        for (size_t i = 0; i < nvars; ++i) {
            uint32_t best = 0;
            bool found = false;
            for (const auto& m : leads) {
                if (m.e[i] == 0) continue;
                bool only_i = true;
                for (size_t k = 0; k < nvars; ++k)
                    if (k != i && m.e[k]) only_i = false;
                if (only_i && (!found || m.e[i] < best)) {
                    best = m.e[i];
                    found = true;
                }
            }
            if (!found)
                throw NotTorsionError("subquotient is not m-power torsion at position " +
                                      std::to_string(j));
            box[i] = best;
        }
        // walk the finite box, skipping multiples of any lead
        Monomial cur(nvars);
        std::function<void(size_t)> walk = [&](size_t i) {
            if (i == nvars) {
                for (const auto& m : leads)
                    if (m.divides(cur)) return;
                ++total;
                return;
            }
            for (uint32_t e = 0; e < box[i]; ++e) {
                cur.e[i] = e;
                walk(i + 1);
            }
            cur.e[i] = 0;
        };
        walk(0);
    }
    return total;
}

int64_t subquotient_length(const Submodule& K, const Submodule& L, const Guards& g) {
    if (K.rank() != L.rank()) throw InputError("subquotient_length: rank mismatch");
    for (const auto& w : K.gens())
        if (!L.contains(w, g)) throw InputError("subquotient_length: K not contained in L");
    if (L.gens().empty()) return 0;
    auto ker = kernel_into_quotient(L.gens(), K.gens(), L.rank(), g);
    const uint32_t s = static_cast<uint32_t>(L.gens().size());
    Submodule kernel(L.ring(), s, std::move(ker));
    return count_standard_monomials(kernel.gb(g), s, L.ring()->nvars());
}

LengthResult gamma_m_length(const PresentedModule& M, const Guards& g) {
    if (M.is_zero_rank()) return {0, true, false};
    Submodule sat = saturate_at_origin(M.relations, g);
    int64_t len = subquotient_length(M.relations, sat, g);
    return {len, true, false};
}

namespace {

// monomials of exact weighted degree t, fed to `emit`
void enumerate_wdeg(const std::vector<int64_t>& w, size_t i, int64_t left, Monomial& cur,
                    const std::function<void(const Monomial&)>& emit) {
    if (i + 1 == w.size()) {
        if (left % w[i] == 0) {
            cur.e[i] = static_cast<uint32_t>(left / w[i]);
            emit(cur);
            cur.e[i] = 0;
        }
        return;
    }
    for (int64_t e = 0; e * w[i] <= left; ++e) {
        cur.e[i] = static_cast<uint32_t>(e);
        enumerate_wdeg(w, i + 1, left - e * w[i], cur, emit);
    }
    cur.e[i] = 0;
}

} // namespace

int64_t hilbert_function(const PresentedModule& M, int64_t t, const Guards& g) {
    if (t < 0) return 0;
    if (M.is_zero_rank()) return 0;
    const RingPtr ring = M.qr->ring();
    for (const auto& v : M.relations.gens()) {
        auto comps = v.to_vector();
        int64_t d = -1;
        for (const auto& c : comps) {
            if (c.is_zero()) continue;
            if (!c.is_homogeneous()) throw InputError("hilbert_function: relations not homogeneous");
            int64_t cd = c.wdegree();
            if (d >= 0 && cd != d) throw InputError("hilbert_function: relations not homogeneous");
            d = cd;
        }
    }
    std::vector<int64_t> w = ring->order.weights;
    if (w.empty()) w.assign(ring->nvars(), 1);

    const auto& gb = M.relations.gb(g);
    int64_t total = 0;
    for (uint32_t j = 0; j < M.rank; ++j) {
        std::vector<Monomial> leads;
        for (const auto& v : gb)
            if (v.lead().pos == j) leads.push_back(v.lead().m);
        Monomial cur(ring->nvars());
        enumerate_wdeg(w, 0, t, cur, [&](const Monomial& m) {
            for (const auto& l : leads)
                if (l.divides(m)) return;
            ++total;
        });
    }
    return total;
}

} // namespace kz
