#include "doctest.h"
#include "kz/module.hpp"
#include "kz/poly_io.hpp"

using namespace kz;

namespace {

QRPtr quotient(uint32_t p, std::vector<std::string> vars, const std::string& q) {
    auto r = make_ring(p, std::move(vars));
    return make_quotient_ring(r, q.empty() ? std::vector<Polynomial>{}
                                           : parse_polynomial_list(r, q));
}

PresentedModule cyclic(const QRPtr& qr, const std::string& gens) {
    return cyclic_module(qr, parse_polynomial_list(qr->ring(), gens));
}

} // namespace

TEST_CASE("gamma_m_length of free modules vanishes in positive depth") {
    auto qr = quotient(2, {"x", "y", "z"}, "x^3 + y^3 + z^3");
    CHECK(gamma_m_length(free_module(qr, 1)).require() == 0);
    CHECK(gamma_m_length(free_module(qr, 3)).require() == 0);
    auto poly = quotient(5, {"x", "y"}, "");
    CHECK(gamma_m_length(free_module(poly, 2)).require() == 0);
}

TEST_CASE("gamma_m_length of artinian quotients counts standard monomials") {
    auto qr = quotient(3, {"x", "y"}, "");
    CHECK(gamma_m_length(cyclic(qr, "x^3, y^3")).require() == 9);
    CHECK(gamma_m_length(cyclic(qr, "x^9, y^9")).require() == 81);
    CHECK(gamma_m_length(cyclic(qr, "x, y")).require() == 1);
}

TEST_CASE("gamma_m_length vanishing on the corner hypersurface") {
    // R = F_2[x,y,z]/(x^2*y - z^2); R/(x^q) has no m-torsion
    auto qr = quotient(2, {"x", "y", "z"}, "x^2*y + z^2");
    CHECK(gamma_m_length(cyclic(qr, "x^2")).require() == 0);
    CHECK(gamma_m_length(cyclic(qr, "x^4")).require() == 0);
}

TEST_CASE("subquotient lengths") {
    auto r = make_ring(5, {"x", "y"});
    ModOrder o{r->order, false};
    auto sub = [&](const std::string& gens) {
        std::vector<VecElem> vs;
        for (const auto& f : parse_polynomial_list(r, gens))
            vs.push_back(VecElem::from_poly(f, 1, 0, o));
        return Submodule(r, 1, vs);
    };
    CHECK(subquotient_length(sub("x^2, x*y, y^2"), sub("x, y")) == 2);
    CHECK(subquotient_length(sub("x, y"), sub("x, y")) == 0);
    // K not inside L
    CHECK_THROWS_AS(subquotient_length(sub("x"), sub("y")), InputError);
    // (x)/(x^2) is not m-power torsion
    CHECK_THROWS_AS(subquotient_length(sub("x^2"), sub("x")), NotTorsionError);

    // whole artinian quotient: P^1/(x,y)^[2] in char 2
    auto r2 = make_ring(2, {"x", "y"});
    ModOrder o2{r2->order, false};
    auto sub2 = [&](const std::string& gens) {
        std::vector<VecElem> vs;
        for (const auto& f : parse_polynomial_list(r2, gens))
            vs.push_back(VecElem::from_poly(f, 1, 0, o2));
        return Submodule(r2, 1, vs);
    };
    CHECK(subquotient_length(sub2("x^2, y^2"), sub2("1")) == 4);
}

TEST_CASE("hilbert function of graded modules") {
    auto pxy = quotient(5, {"x", "y"}, "");
    auto P = free_module(pxy, 1);
    CHECK(hilbert_function(P, 0) == 1);
    CHECK(hilbert_function(P, 2) == 3);

    auto fermat = quotient(7, {"x", "y", "z"}, "");
    auto M = cyclic(fermat, "x^3 + y^3 + z^3");
    CHECK(hilbert_function(M, 3) == 9); // 10 monomials minus one relation

    // weighted grading: x^2*y - z^2 homogeneous under (1,2,2)
    auto rw = make_ring(2, {"x", "y", "z"}, {1, 2, 2});
    auto qw = make_quotient_ring(rw, parse_polynomial_list(rw, "x^2*y + z^2"));
    auto Mw = cyclic_module(qw, {});
    CHECK(hilbert_function(Mw, 0) == 1);
    CHECK(hilbert_function(Mw, 1) == 1);  // x
    CHECK(hilbert_function(Mw, 2) == 3);  // x^2, y, z
    CHECK(hilbert_function(Mw, 4) == 5);  // of the 6 wdeg-4 monomials one relation

    auto nonh = cyclic(fermat, "x + y^2");
    CHECK_THROWS_AS(hilbert_function(nonh, 1), InputError);
}

TEST_CASE("sum of hilbert function equals torsion length for finite modules") {
    auto qr = quotient(3, {"x", "y"}, "");
    auto M = cyclic(qr, "x^2, x*y, y^3");
    int64_t total = 0;
    for (int64_t t = 0; t <= 10; ++t) total += hilbert_function(M, t);
    CHECK(total == gamma_m_length(M).require());
}

TEST_CASE("ideal_as_module presents an ideal on its generators") {
    // I = (x, y) inside P = F_5[x,y]: relations are the Koszul syzygy
    auto qr = quotient(5, {"x", "y"}, "");
    auto M = ideal_as_module(qr, parse_polynomial_list(qr->ring(), "x, y"));
    CHECK(M.rank == 2);
    REQUIRE(M.relations.gens().size() == 1);
    // torsion-free, so no Gamma_m
    CHECK(gamma_m_length(M).require() == 0);

    // quadric cone: (x, u) = (x):(v) as a module over R
    auto quad = quotient(5, {"x", "y", "u", "v"}, "x*y - u*v");
    auto I = ideal_as_module(quad, parse_polynomial_list(quad->ring(), "x, u"));
    CHECK(I.rank == 2);
    CHECK(gamma_m_length(I).require() == 0);
}

TEST_CASE("generators_module of a zero submodule has rank zero") {
    auto qr = quotient(2, {"x", "y", "z"}, "x^3 + y^3 + z^3");
    // the quotient generator itself is zero in R
    auto M = ideal_as_module(qr, parse_polynomial_list(qr->ring(), "x^3 + y^3 + z^3"));
    CHECK(M.is_zero_rank());
    CHECK(gamma_m_length(M).require() == 0);
}
