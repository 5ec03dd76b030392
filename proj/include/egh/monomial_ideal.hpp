#pragma once

#include <optional>
#include <vector>

#include "egh/hilbert.hpp"
#include "egh/monomial.hpp"
#include "egh/ring.hpp"

namespace egh {

class Ideal;

// Monomial ideal held by its minimal generators: an antichain under
// divisibility, sorted in the fixed enumeration order. The unit ideal is
// generated by 1; the zero ideal has no generators.
class MonomialIdeal {
public:
    static MonomialIdeal from_generators(RingPtr ring, std::vector<Monomial> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Monomial>& generators() const { return gens_; }

    bool is_unit() const;
    bool is_zero() const { return gens_.empty(); }

    bool contains(const Monomial& m) const;

    // Dimension of (S/ideal)_d: standard monomials of degree d.
    long long quotient_dim(int d) const;

    // Every variable carries a pure power, so the quotient is finite.
    bool artinian() const;

    // Exponent of the pure-power generator x_i^e, if present.
    std::optional<int> pure_power(int var) const;

    // Full Hilbert function; requires an Artinian quotient (or unit ideal).
    HilbertFunction hilbert() const;

    // All standard monomials; requires Artinian.
    std::vector<Monomial> standard_monomials() const;

    Ideal to_ideal() const;

    bool operator==(const MonomialIdeal& other) const;

private:
    MonomialIdeal(RingPtr ring, std::vector<Monomial> gens)
        : ring_(std::move(ring)), gens_(std::move(gens)) {}

    RingPtr ring_;
    std::vector<Monomial> gens_;
};

}  // namespace egh
