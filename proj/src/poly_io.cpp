#include "kz/poly_io.hpp"

#include <cctype>
#include <sstream>

namespace kz {

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw InputError("polynomial parse error at position " + std::to_string(pos) + ": " + msg);
    }
    uint64_t read_int() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected integer");
        uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > (1ull << 40)) fail("integer literal too large");
            ++pos;
        }
        return v;
    }
    std::string read_ident() {
        skip_ws();
        if (pos >= s.size() || !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            fail("expected identifier");
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
};

} // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
    Lexer lx{text};
    std::vector<Term> terms;
    const uint32_t p = ring->p;
    bool first = true;
    while (!lx.eof()) {
        uint32_t sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            ++lx.pos;
            if (c == '-') sign = p - 1;
        } else if (!first) {
            lx.fail("expected '+' or '-' between terms");
        }
        first = false;

        uint64_t coeff = 1;
        bool saw_any = false;
        if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            coeff = lx.read_int() % p;
            saw_any = true;
            if (lx.peek() == '*') ++lx.pos;
        }
        Monomial mono(ring->nvars());
        while (std::isalpha(static_cast<unsigned char>(lx.peek())) || lx.peek() == '_') {
            std::string name = lx.read_ident();
            int idx = ring->var_index(name);
            if (idx < 0) lx.fail("unknown variable '" + name + "'");
            uint64_t exp = 1;
            if (lx.peek() == '^') {
                ++lx.pos;
                exp = lx.read_int();
                if (exp > 100000) lx.fail("exponent too large");
            }
            mono.e[idx] += static_cast<uint32_t>(exp);
            saw_any = true;
            if (lx.peek() == '*') {
                ++lx.pos;
                if (!(std::isalpha(static_cast<unsigned char>(lx.peek())) || lx.peek() == '_' ||
                      std::isdigit(static_cast<unsigned char>(lx.peek()))))
                    lx.fail("dangling '*'");
                if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
                    coeff = coeff * (lx.read_int() % p) % p;
                    if (lx.peek() == '*') ++lx.pos;
                }
            }
        }
        if (!saw_any) lx.fail("empty term");
        uint32_t cc = static_cast<uint32_t>(coeff % p);
        cc = mod_mul(cc, sign, p);
        if (cc) terms.push_back({std::move(mono), cc});
    }
    return Polynomial(ring, std::move(terms));
}

std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring, const std::string& text,
                                              char sep) {
    std::vector<Polynomial> out;
    std::string cur;
    std::stringstream ss(text);
    while (std::getline(ss, cur, sep)) {
        bool blank = true;
        for (char c : cur)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        out.push_back(parse_polynomial(ring, cur));
    }
    return out;
}

std::string to_string(const Monomial& m, const Ring& ring) {
    std::string out;
    for (size_t i = 0; i < m.e.size(); ++i) {
        if (!m.e[i]) continue;
        if (!out.empty()) out += "*";
        out += ring.vars[i];
        if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
    }
    return out;
}

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& t : f.terms()) {
        if (!out.empty()) out += " + ";
        std::string mono = to_string(t.m, *f.ring());
        if (mono.empty()) {
            out += std::to_string(t.c);
        } else if (t.c == 1) {
            out += mono;
        } else {
            out += std::to_string(t.c) + "*" + mono;
        }
    }
    return out;
}

} // namespace kz
