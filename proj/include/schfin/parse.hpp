#pragma once

#include "schfin/polynomial.hpp"
#include "schfin/ratfunc.hpp"

#include <span>
#include <string>
#include <string_view>

namespace schfin {

// Polynomial expression syntax:
//   expr   := term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := var ('^' nat)?
//   coeff  := int | int '/' posint
// Whitespace insensitive; variables are ASCII identifiers. Errors carry the
// 0-based offset of the offending token (ParseError).
Polynomial parse_polynomial(std::string_view text, std::span<const std::string> vars);

// Rational function of t: "poly", or "(poly)/(poly)" with nonzero denominator.
RationalFunction parse_rational_function(std::string_view text);

// Exact rational matrix literal "[a b; c d]"; rows separated by ';'.
// Returns row-major entries; rows/cols report the shape. "[ ]" is 0 x 0.
struct ParsedMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> entries;
};
ParsedMatrix parse_matrix(std::string_view text);

Rational parse_rational_number(std::string_view text);

} // namespace schfin
