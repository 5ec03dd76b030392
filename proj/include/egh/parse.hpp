#pragma once

#include <string_view>

#include "egh/polynomial.hpp"

namespace egh {

// Parses the polynomial grammar: integer coefficients, ring variables,
// operators + - * ^, parentheses; whitespace insignificant. Throws
// ParseError with the byte offset of the first bad character.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

}  // namespace egh
