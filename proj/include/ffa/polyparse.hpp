#pragma once

#include <string_view>

#include "ffa/field.hpp"
#include "ffa/poly.hpp"
#include "ffa/towers.hpp"

namespace ffa {

// Sums of terms c*x^k. A coefficient is an integer (reduced mod p) or a
// bracketed coordinate list "[c_{s-1},...,c_0]" as printed by Field::format.
// The variable may be written x, X, y, Y, t, T or z. Accepts the output of
// Poly::to_string.
Poly parse_poly(std::string_view text, const Field& field);

// "NUM/DEN" split at the top-level '/', or a plain polynomial. Parentheses
// around either side are optional.
RationalMap parse_rational_map(std::string_view text, const Field& field);

}  // namespace ffa
