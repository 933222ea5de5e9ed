#ifndef BIFURCATA_PARSER_HPP
#define BIFURCATA_PARSER_HPP

#include <string>

#include "bifurcata/poly.hpp"
#include "bifurcata/rational.hpp"

namespace bifurcata {

// Parses a polynomial over Q in the variables x, y.
//
// Grammar: integers, rationals "p/q", variables, '+', '-', '*', '^',
// parentheses. Exponents must be non-negative integer literals. Implicit
// multiplication is rejected with a hint. Whitespace is insignificant.
// Errors carry 1-based line/column positions.
Poly<Rat> parse_polynomial(const std::string& text);

}  // namespace bifurcata

#endif
