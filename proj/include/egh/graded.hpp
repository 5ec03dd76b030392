#pragma once

#include <cstdint>
#include <vector>

#include "egh/monomial.hpp"
#include "egh/polynomial.hpp"

namespace egh {

// Position of m inside monomials_of_degree(m.nvars(), m.degree()), computed
// combinatorially so callers never build the full list for a lookup.
std::size_t monomial_rank(const Monomial& m);

// Coefficient row of a homogeneous polynomial in the fixed degree-d monomial
// basis. The zero polynomial gives a zero row; anything else must be
// homogeneous of degree exactly d.
std::vector<std::uint32_t> homogeneous_row(int nvars, const Polynomial& f, int degree);

// Inverse of homogeneous_row for a given ring and degree.
Polynomial row_to_polynomial(const RingPtr& ring, const std::vector<std::uint32_t>& row,
                             int degree);

}  // namespace egh
