#include "kz/ring.hpp"

#include "kz/field.hpp"

namespace kz {

static Cmp cmp_int(int64_t a, int64_t b) {
    if (a < b) return Cmp::LT;
    if (a > b) return Cmp::GT;
    return Cmp::EQ;
}

Cmp order_compare(const MonomialOrder& o, const Monomial& a, const Monomial& b) {
    if (a.e.size() != b.e.size()) throw InputError("monomial length mismatch");
    size_t n = a.e.size();

    if (o.elim_split < n) {
        int64_t da = 0, db = 0;
        for (size_t i = o.elim_split; i < n; ++i) {
            da += a.e[i];
            db += b.e[i];
        }
        if (da != db) return cmp_int(da, db);
    }

    switch (o.kind) {
    case MonomialOrder::Kind::Lex:
        for (size_t i = 0; i < n; ++i)
            if (a.e[i] != b.e[i]) return cmp_int(a.e[i], b.e[i]);
        return Cmp::EQ;
    case MonomialOrder::Kind::Grevlex: {
        int64_t da = a.wdegree(o.weights), db = b.wdegree(o.weights);
        if (da != db) return cmp_int(da, db);
        // equal degree: last non-zero entry of a-b negative means a > b
        for (size_t i = n; i-- > 0;) {
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? Cmp::GT : Cmp::LT;
        }
        return Cmp::EQ;
    }
    }
    return Cmp::EQ;
}

RingPtr make_ring(uint32_t p, std::vector<std::string> vars, std::vector<int64_t> weights,
                  MonomialOrder::Kind kind) {
    if (!is_prime_u32(p)) throw InputError("characteristic must be prime");
    if (vars.empty()) throw InputError("ring needs at least one variable");
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw InputError("duplicate variable name: " + vars[i]);
    if (!weights.empty()) {
        if (weights.size() != vars.size()) throw InputError("weight count must match variables");
        for (int64_t w : weights)
            if (w <= 0) throw InputError("weights must be positive");
    }
    auto r = std::make_shared<Ring>();
    r->p = p;
    r->base_vars = vars.size();
    r->vars = std::move(vars);
    r->order.kind = kind;
    r->order.weights = std::move(weights);
    return r;
}

RingPtr extend_ring(const RingPtr& ring, size_t naux) {
    auto r = std::make_shared<Ring>(*ring);
    for (size_t i = 0; i < naux; ++i) r->vars.push_back("@t" + std::to_string(i));
    r->order.elim_split = ring->nvars();
    if (!r->order.weights.empty())
        for (size_t i = 0; i < naux; ++i) r->order.weights.push_back(1);
    r->base_vars = ring->nvars();
    return r;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->p == b->p && a->vars == b->vars && a->order.kind == b->order.kind &&
           a->order.weights == b->order.weights && a->order.elim_split == b->order.elim_split;
}

} // namespace kz
