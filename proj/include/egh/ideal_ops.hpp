#pragma once

#include <random>
#include <utility>
#include <vector>

#include "egh/ideal.hpp"

namespace egh {

// Sum of ideals: generators concatenated.
Ideal add(const Ideal& I, const Ideal& J);
Ideal add(const Ideal& I, const Polynomial& f);

// I ∩ J, by eliminating the tag t from t·I + (1-t)·J.
Ideal intersect(const Ideal& I, const Ideal& J);

// I : f = (I ∩ <f>) / f for a nonzero homogeneous f.
Ideal colon(const Ideal& I, const Polynomial& f);

// I : J as the intersection of the single colons over J's generators.
Ideal colon(const Ideal& I, const Ideal& J);

// (I : f^∞, N) with N minimal such that I : f^N = I : f^(N+1).
std::pair<Ideal, int> saturate(const Ideal& I, const Polynomial& f);

// Reduced-echelon basis of the graded piece I_d, as polynomials.
std::vector<Polynomial> degree_basis(const Ideal& I, int d);

// Random F_p combination of degree_basis(I, d); may be zero when the draw
// is unlucky or the piece itself is zero.
Polynomial random_element(const Ideal& I, int d, std::mt19937_64& rng);

// Minimal generator count equals the height. False for the unit ideal.
bool is_complete_intersection(const Ideal& I);

}  // namespace egh
