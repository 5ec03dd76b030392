#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "egh/hilbert.hpp"
#include "egh/monomial.hpp"
#include "egh/ring.hpp"

namespace egh {

// Finite set of monomials closed under divisibility. Γ and the Γ̃_i of the
// witness recursion live here. Construction does not enforce closure — call
// validate_multicomplex to check it, since the recursion's whole point is
// that closure is a theorem, not an input assumption.
class Multicomplex {
public:
    Multicomplex() = default;

    // Sorts into the fixed enumeration order and drops duplicates.
    static Multicomplex from_monomials(RingPtr ring, std::vector<Monomial> monomials);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Monomial>& monomials() const { return monos_; }
    std::size_t size() const { return monos_.size(); }
    bool empty() const { return monos_.empty(); }

    bool contains(const Monomial& m) const;

    // d -> number of members of degree d.
    HilbertFunction hf() const;

    bool operator==(const Multicomplex& other) const;

private:
    Multicomplex(RingPtr ring, std::vector<Monomial> monos)
        : ring_(std::move(ring)), monos_(std::move(monos)) {}

    RingPtr ring_;
    std::vector<Monomial> monos_;  // enumeration order
};

// All divisors of m, in enumeration order.
std::vector<Monomial> divisors(const Monomial& m);

struct ValidationResult {
    bool ok = true;
    // (member, missing divisor) on failure.
    std::optional<std::pair<Monomial, Monomial>> witness;
};

// Checks closure under divisibility; the witness is the first failure in
// enumeration order.
ValidationResult validate_multicomplex(const std::vector<Monomial>& monomials);
ValidationResult validate_multicomplex(const Multicomplex& m);

}  // namespace egh
