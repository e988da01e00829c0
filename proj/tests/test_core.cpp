#include <random>

#include "doctest.h"
#include "kz/field.hpp"
#include "kz/poly.hpp"
#include "kz/poly_io.hpp"

using namespace kz;

namespace {

RingPtr ring_xy(uint32_t p) { return make_ring(p, {"x", "y"}); }
RingPtr ring_xyz(uint32_t p) { return make_ring(p, {"x", "y", "z"}); }

Monomial mono(std::vector<uint32_t> e) { return Monomial(std::move(e)); }

Monomial random_mono(std::mt19937& rng, size_t nvars, uint32_t maxExp) {
    std::uniform_int_distribution<uint32_t> d(0, maxExp);
    Monomial m(nvars);
    for (auto& x : m.e) x = d(rng);
    return m;
}

Polynomial random_poly(std::mt19937& rng, const RingPtr& r, size_t nterms, uint32_t maxExp) {
    std::uniform_int_distribution<uint32_t> c(0, r->p - 1);
    std::vector<Term> ts;
    for (size_t i = 0; i < nterms; ++i) ts.push_back({random_mono(rng, r->nvars(), maxExp), c(rng)});
    return Polynomial(r, std::move(ts));
}

} // namespace

TEST_CASE("prime field arithmetic") {
    FieldElement a(3, 5), b(4, 5);
    CHECK((a + b).value == 2);
    CHECK((a - b).value == 4);
    CHECK((a * b).value == 2);
    CHECK((a / b).value == 2); // 3 * 4^{-1} = 3*4 = 12 = 2 mod 5
    CHECK(a.inv().value == 2);
    CHECK((-b).value == 1);
    for (uint32_t p : {2u, 3u, 5u, 7u, 11u, 101u})
        for (uint32_t v = 1; v < p; ++v) CHECK(mod_mul(v, mod_inv(v, p), p) == 1);
    CHECK(is_prime_u32(2));
    CHECK(is_prime_u32(31));
    CHECK_FALSE(is_prime_u32(1));
    CHECK_FALSE(is_prime_u32(91));
    CHECK_THROWS_AS(FieldElement(1, 5) / FieldElement(0, 5), InputError);
}

TEST_CASE("grevlex order conventions") {
    auto r = ring_xy(5);
    const auto& o = r->order;
    // x before y in the variable list means x > y
    CHECK(order_compare(o, mono({1, 0}), mono({0, 1})) == Cmp::GT);
    CHECK(order_compare(o, mono({2, 1}), mono({2, 1})) == Cmp::EQ);
    // x^2 vs x*y
    CHECK(order_compare(o, mono({2, 0}), mono({1, 1})) == Cmp::GT);
    // degree dominates
    CHECK(order_compare(o, mono({0, 3}), mono({2, 0})) == Cmp::GT);

    MonomialOrder lex{MonomialOrder::Kind::Lex, {}, SIZE_MAX};
    CHECK(order_compare(lex, mono({1, 0}), mono({0, 5})) == Cmp::GT);
}

TEST_CASE("order axioms hold on random monomials") {
    std::mt19937 rng(12345);
    auto wr = make_ring(3, {"x", "y", "z"}, {1, 2, 2});
    std::vector<MonomialOrder> orders = {ring_xyz(3)->order, wr->order,
                                         MonomialOrder{MonomialOrder::Kind::Lex, {}, SIZE_MAX}};
    for (const auto& o : orders) {
        Monomial one(3);
        for (int it = 0; it < 300; ++it) {
            Monomial a = random_mono(rng, 3, 6), b = random_mono(rng, 3, 6),
                     c = random_mono(rng, 3, 6);
            Cmp ab = order_compare(o, a, b);
            // totality / antisymmetry
            Cmp ba = order_compare(o, b, a);
            if (ab == Cmp::EQ) {
                CHECK(a == b);
                CHECK(ba == Cmp::EQ);
            } else {
                CHECK(ba != ab);
            }
            // multiplicative
            CHECK(order_compare(o, a * c, b * c) == ab);
            // 1 minimal
            if (!a.is_one()) CHECK(order_compare(o, a, one) == Cmp::GT);
        }
    }
}

TEST_CASE("polynomial arithmetic basics") {
    auto r5 = ring_xy(5);
    auto f = parse_polynomial(r5, "x + y");
    auto g = parse_polynomial(r5, "x - y");
    CHECK(to_string(f + g) == "2*x");
    CHECK((f * Polynomial::zero(r5)).is_zero());

    auto r3 = ring_xy(3);
    auto a = parse_polynomial(r3, "x + y");
    auto b = parse_polynomial(r3, "x - y");
    CHECK(a * b == parse_polynomial(r3, "x^2 + 2*y^2")); // x^2 - y^2 over F_3

    auto other = ring_xyz(5);
    CHECK_THROWS_AS(f + parse_polynomial(other, "x"), InputError);
}

TEST_CASE("frobenius power of polynomials") {
    auto r2 = ring_xy(2);
    CHECK(frobenius_power(parse_polynomial(r2, "x + y"), 2) == parse_polynomial(r2, "x^2 + y^2"));

    auto r3 = ring_xy(3);
    CHECK(frobenius_power(parse_polynomial(r3, "x + 2*y"), 3) ==
          parse_polynomial(r3, "x^3 + 2*y^3"));

    auto r2z = ring_xyz(2);
    CHECK(frobenius_power(parse_polynomial(r2z, "x^2*y + z"), 4) ==
          parse_polynomial(r2z, "x^8*y^4 + z^4"));

    CHECK_THROWS_AS(frobenius_power(parse_polynomial(r3, "x"), 2), InputError);
}

TEST_CASE("frobenius is additive and composes") {
    std::mt19937 rng(777);
    for (uint32_t p : {2u, 3u, 5u}) {
        auto r = ring_xyz(p);
        for (int it = 0; it < 50; ++it) {
            auto f = random_poly(rng, r, 4, 3);
            auto g = random_poly(rng, r, 4, 3);
            uint64_t q = p;
            CHECK(frobenius_power(f + g, q) == frobenius_power(f, q) + frobenius_power(g, q));
            CHECK(frobenius_power(f, uint64_t(p) * p) ==
                  frobenius_power(frobenius_power(f, p), p));
        }
    }
}

TEST_CASE("polynomial text grammar round trips") {
    auto r = make_ring(7, {"x", "y", "z"});
    std::vector<std::string> cases = {"x^3*y + 2*z", "3", "0", "x - y - 6", "2x^2y",
                                      "x*x*y^2 + 5*z^10"};
    for (const auto& s : cases) {
        auto f = parse_polynomial(r, s);
        auto back = parse_polynomial(r, to_string(f));
        CHECK(f == back);
    }
    CHECK(parse_polynomial(r, "x - x").is_zero());
    CHECK(to_string(parse_polynomial(r, "  x ^ 2 * y + 1 ")) == "x^2*y + 1");
    CHECK_THROWS_AS(parse_polynomial(r, "w + 1"), InputError);
    CHECK_THROWS_AS(parse_polynomial(r, "x + + y"), InputError);
}

TEST_CASE("weighted degree and homogeneity") {
    auto r = make_ring(2, {"x", "y", "z"}, {1, 2, 2});
    auto f = parse_polynomial(r, "x^2*y + z^2"); // 2+2 = 4 and 4
    CHECK(f.is_homogeneous());
    CHECK(f.wdegree() == 4);
    CHECK_FALSE(parse_polynomial(r, "x + y").is_homogeneous());
}
