#include "kz/poly.hpp"

#include <algorithm>

namespace kz {

void check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_)) throw InputError("polynomial ring mismatch");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
    normalize();
}

void Polynomial::normalize() {
    const uint32_t p = ring_->p;
    for (auto& t : terms_) t.c %= p;
    std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
        return order_compare(ring_->order, a.m, b.m) == Cmp::GT;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().m == t.m) {
            out.back().c = mod_add(out.back().c, t.c, p);
        } else {
            out.push_back(std::move(t));
        }
    }
    terms_.clear();
    for (auto& t : out)
        if (t.c) terms_.push_back(std::move(t));
}

uint32_t Polynomial::constant_term() const {
    if (terms_.empty()) return 0;
    const Term& last = terms_.back();
    return last.m.is_one() ? last.c : 0;
}

int64_t Polynomial::degree() const {
    int64_t d = -1;
    for (const auto& t : terms_) d = std::max(d, t.m.degree());
    return d;
}

int64_t Polynomial::wdegree() const {
    int64_t d = -1;
    for (const auto& t : terms_) d = std::max(d, t.m.wdegree(ring_->order.weights));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int64_t d = terms_.front().m.wdegree(ring_->order.weights);
    for (const auto& t : terms_)
        if (t.m.wdegree(ring_->order.weights) != d) return false;
    return true;
}

Polynomial Polynomial::constant(const RingPtr& r, int64_t c) {
    int64_t v = c % int64_t(r->p);
    if (v < 0) v += r->p;
    Polynomial f(r);
    if (v) f.terms_.push_back({Monomial(r->nvars()), static_cast<uint32_t>(v)});
    return f;
}

Polynomial Polynomial::variable(const RingPtr& r, size_t idx, uint32_t exp) {
    if (idx >= r->nvars()) throw InputError("variable index out of range");
    Monomial m(r->nvars());
    m.e[idx] = exp;
    Polynomial f(r);
    if (exp == 0) return constant(r, 1);
    f.terms_.push_back({std::move(m), 1});
    return f;
}

Polynomial Polynomial::from_term(const RingPtr& r, Monomial m, uint32_t c) {
    Polynomial f(r);
    c %= r->p;
    if (c) f.terms_.push_back({std::move(m), c});
    return f;
}

// merge of two descending term lists
static std::vector<Term> merge_terms(const RingPtr& ring, const std::vector<Term>& a,
                                     const std::vector<Term>& b, bool subtract) {
    const uint32_t p = ring->p;
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        Cmp c = order_compare(ring->order, a[i].m, b[j].m);
        if (c == Cmp::GT) {
            out.push_back(a[i++]);
        } else if (c == Cmp::LT) {
            Term t = b[j++];
            if (subtract) t.c = mod_neg(t.c, p);
            out.push_back(std::move(t));
        } else {
            uint32_t v = subtract ? mod_sub(a[i].c, b[j].c, p) : mod_add(a[i].c, b[j].c, p);
            if (v) out.push_back({a[i].m, v});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) {
        Term t = b[j];
        if (subtract) t.c = mod_neg(t.c, p);
        out.push_back(std::move(t));
    }
    return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    Polynomial r(a.ring());
    auto merged = merge_terms(a.ring(), a.terms(), b.terms(), false);
    return Polynomial(a.ring(), std::move(merged));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    auto merged = merge_terms(a.ring(), a.terms(), b.terms(), true);
    return Polynomial(a.ring(), std::move(merged));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    const uint32_t p = a.ring()->p;
    std::vector<Term> prods;
    prods.reserve(a.size() * b.size());
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms()) prods.push_back({ta.m * tb.m, mod_mul(ta.c, tb.c, p)});
    return Polynomial(a.ring(), std::move(prods));
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.c = mod_neg(t.c, ring_->p);
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring(), b.ring())) return false;
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a.terms()[i].m == b.terms()[i].m) || a.terms()[i].c != b.terms()[i].c) return false;
    return true;
}

Polynomial Polynomial::scaled(uint32_t c) const {
    c %= ring_->p;
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.c = mod_mul(t.c, c, ring_->p);
    return r;
}

Polynomial Polynomial::mono_mul(const Monomial& m, uint32_t c) const {
    c %= ring_->p;
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.m * m, mod_mul(t.c, c, ring_->p)});
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(mod_inv(lead().c, ring_->p));
}

Polynomial Polynomial::sub_scaled(const Polynomial& f, uint32_t c, const Monomial& m,
                                  const Polynomial& g) {
    return f - g.mono_mul(m, c);
}

bool is_power_of(uint64_t q, uint32_t p) {
    if (q == 0) return false;
    while (q % p == 0) q /= p;
    return q == 1;
}

Polynomial frobenius_power(const Polynomial& f, uint64_t q) {
    if (!is_power_of(q, f.ring()->p))
        throw InputError("frobenius_power: q must be a power of the characteristic");
    std::vector<Term> ts;
    ts.reserve(f.size());
    for (const auto& t : f.terms()) ts.push_back({t.m.pow_scale(q), t.c});
    return Polynomial(f.ring(), std::move(ts));
}

Polynomial lift_to_ring(const Polynomial& f, const RingPtr& target) {
    if (!f.ring()) return Polynomial(target);
    if (target->nvars() < f.ring()->nvars() || target->p != f.ring()->p)
        throw InputError("lift_to_ring: incompatible rings");
    std::vector<Term> ts;
    ts.reserve(f.size());
    for (const auto& t : f.terms()) {
        Monomial m(target->nvars());
        std::copy(t.m.e.begin(), t.m.e.end(), m.e.begin());
        ts.push_back({std::move(m), t.c});
    }
    return Polynomial(target, std::move(ts));
}

Polynomial restrict_to_ring(const Polynomial& f, const RingPtr& target) {
    if (target->nvars() > f.ring()->nvars() || target->p != f.ring()->p)
        throw InputError("restrict_to_ring: incompatible rings");
    std::vector<Term> ts;
    ts.reserve(f.size());
    for (const auto& t : f.terms()) {
        for (size_t i = target->nvars(); i < t.m.e.size(); ++i)
            if (t.m.e[i]) throw InputError("restrict_to_ring: term involves auxiliary variable");
        Monomial m(std::vector<uint32_t>(t.m.e.begin(), t.m.e.begin() + target->nvars()));
        ts.push_back({std::move(m), t.c});
    }
    return Polynomial(target, std::move(ts));
}

} // namespace kz
