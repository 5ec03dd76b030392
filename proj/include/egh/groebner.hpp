#pragma once

#include <vector>

#include "egh/monomial.hpp"
#include "egh/polynomial.hpp"

namespace egh {

// Resource guard for Buchberger runs. Exceeding either bound raises
// ResourceLimitError; never a silent truncation.
struct GroebnerLimits {
    int max_spair_degree = 40;
    std::size_t max_basis_size = 5000;
};

// Reduced Groebner basis of the ideal generated by `gens` under `order`.
// Deterministic for a fixed input list: same input, same basis, and the
// reduced basis itself is unique for the order. Output is monic, pairwise
// tail-reduced, sorted by decreasing leading monomial.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens,
                                       const MonomialOrder& order,
                                       const GroebnerLimits& limits = {});

// Full normal form of f against a basis under `order`: no term of the
// result is divisible by any basis leading monomial. Scans the basis in
// list order, so it is deterministic.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);

// Membership via reduction against a Groebner basis of the ideal.
bool reduces_to_zero(const Polynomial& f, const std::vector<Polynomial>& gb,
                     const MonomialOrder& order);

// Leading monomial of a nonzero polynomial under an arbitrary order.
const Monomial& leading_monomial(const Polynomial& f, const MonomialOrder& order);

}  // namespace egh
