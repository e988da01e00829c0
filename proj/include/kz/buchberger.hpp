#pragma once

#include <vector>

#include "kz/guards.hpp"
#include "kz/vecpoly.hpp"

namespace kz {

/// Full normal form of f against a list of module elements (expected to be a
/// Groebner basis for the ideal-membership contract to hold). Deterministic:
/// the first divisor in list order wins.
VecElem normal_form(VecElem f, const std::vector<VecElem>& basis, const ModOrder& o);

/// Reduced Groebner basis via Buchberger with Gebauer-Moeller pair
/// elimination and sugar-degree selection. Output is monic, self-reduced and
/// sorted ascending by lead term, hence canonical for the given order.
std::vector<VecElem> reduced_groebner(std::vector<VecElem> gens, const ModOrder& o,
                                      const Guards& guards);

/// Generators of the syzygy module of `gens` (elements of P^r): all
/// (a_1..a_s) with sum a_i * gens_i = 0, as elements of P^s.
std::vector<VecElem> syzygy_generators(const std::vector<VecElem>& gens, const Guards& guards);

bool basis_equal(const std::vector<VecElem>& a, const std::vector<VecElem>& b);

} // namespace kz
