#pragma once

#include <vector>

#include "egh/ci_type.hpp"
#include "egh/hilbert.hpp"
#include "egh/monomial_ideal.hpp"

namespace egh {

// Lex-plus-powers ideal containing x_1^(e_1), ..., x_r^(e_r) with quotient
// Hilbert function `target`: per degree, the ideal's monomials are the
// power multiples plus the lex-largest remaining monomials needed to hit
// the target dimension. The filled slices are then verified to be closed
// under multiplication by every variable; any failure (overshoot, dimension
// bound, closure) raises TargetNotAchievable.
MonomialIdeal lex_plus_powers(const CIType& e, const HilbertFunction& target,
                              const RingPtr& ring);

// The layered lift: generators ∪_j { m·x_n^j : m a generator of M_j } in the
// ring with one more variable. For an ascending nested layer list the
// layered Hilbert identity H(S/K, d) = Σ_j H(S'/M_min(j,N), d-j) is checked
// numerically through the interesting degrees.
MonomialIdeal k_lift(const std::vector<MonomialIdeal>& layers, const RingPtr& ring_n);

}  // namespace egh
