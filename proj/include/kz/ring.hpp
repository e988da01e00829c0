#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "kz/guards.hpp"

namespace kz {

enum class Cmp { LT, EQ, GT };

/// Global monomial order. Grevlex compares weighted total degree first and
/// breaks ties reverse-lexicographically, so all-ones weights give the
/// classical graded reverse lex order. An elimination block of auxiliary
/// variables (indices >= elim_split) dominates everything else; it is only
/// used internally for colon/saturation/intersection computations.
struct MonomialOrder {
    enum class Kind { Grevlex, Lex };
    Kind kind = Kind::Grevlex;
    std::vector<int64_t> weights;                              // one per variable; empty = all ones
    size_t elim_split = std::numeric_limits<size_t>::max();    // no elimination block by default
};

struct Monomial {
    std::vector<uint32_t> e;

    Monomial() = default;
    explicit Monomial(size_t nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<uint32_t> exps) : e(std::move(exps)) {}

    size_t nvars() const { return e.size(); }
    bool is_one() const {
        for (uint32_t x : e)
            if (x) return false;
        return true;
    }
    int64_t degree() const {
        int64_t d = 0;
        for (uint32_t x : e) d += x;
        return d;
    }
    int64_t wdegree(const std::vector<int64_t>& w) const {
        if (w.empty()) return degree();
        int64_t d = 0;
        for (size_t i = 0; i < e.size(); ++i) d += int64_t(e[i]) * w[i];
        return d;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r(a.e);
        for (size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
        return r;
    }

    bool divides(const Monomial& b) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > b.e[i]) return false;
        return true;
    }

    // quotient b / a, caller guarantees divisibility
    static Monomial quotient(const Monomial& b, const Monomial& a) {
        Monomial r(b.e);
        for (size_t i = 0; i < r.e.size(); ++i) r.e[i] -= a.e[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.e);
        for (size_t i = 0; i < r.e.size(); ++i)
            if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
        return r;
    }

    bool coprime(const Monomial& b) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] && b.e[i]) return false;
        return true;
    }

    Monomial pow_scale(uint64_t q) const {
        Monomial r(e);
        for (auto& x : r.e) {
            uint64_t v = uint64_t(x) * q;
            if (v > 0x3fffffffULL) throw GuardError("monomial exponent overflow");
            x = static_cast<uint32_t>(v);
        }
        return r;
    }
};

Cmp order_compare(const MonomialOrder& o, const Monomial& a, const Monomial& b);

/// Ambient polynomial ring F_p[x_1..x_v] with a fixed global order.
struct Ring {
    uint32_t p = 2;
    std::vector<std::string> vars;
    MonomialOrder order;
    size_t base_vars = 0; // vars.size() minus trailing auxiliary variables

    size_t nvars() const { return vars.size(); }
    int var_index(const std::string& name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return -1;
    }
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(uint32_t p, std::vector<std::string> vars,
                  std::vector<int64_t> weights = {},
                  MonomialOrder::Kind kind = MonomialOrder::Kind::Grevlex);

// same coefficient field and variables plus `naux` trailing elimination
// variables that dominate the order
RingPtr extend_ring(const RingPtr& ring, size_t naux);

bool same_ring(const RingPtr& a, const RingPtr& b);

} // namespace kz
