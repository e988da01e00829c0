#pragma once

#include <string>
#include <vector>

#include "kz/poly.hpp"

namespace kz {

/// Text grammar shared by the CLI and golden tests:
/// terms joined by '+'/'-', term = coefficient '*'? monomial,
/// monomial = factors like x^3*y joined by '*'. Whitespace insignificant.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring, const std::string& text,
                                              char sep = ',');

std::string to_string(const Polynomial& f);
std::string to_string(const Monomial& m, const Ring& ring);

} // namespace kz
