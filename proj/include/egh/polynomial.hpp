#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "egh/monomial.hpp"
#include "egh/ring.hpp"

namespace egh {

struct Term {
    Monomial mono;
    std::uint32_t coeff = 0;  // in [1, p), zero terms never stored

    bool operator==(const Term& other) const = default;
};

// Sparse polynomial over F_p with exact arithmetic. Terms are kept sorted in
// descending degrevlex order with no zero coefficients, so equality is
// representation equality.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
    static Polynomial constant(RingPtr ring, long long value);
    static Polynomial variable(RingPtr ring, int index);
    static Polynomial monomial(RingPtr ring, Monomial m, std::uint32_t coeff = 1);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    // Leading data under degrevlex; polynomial must be nonzero.
    const Monomial& leading_monomial() const;
    std::uint32_t leading_coeff() const;
    const Term& leading_term() const;

    // Max term degree, -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    // Degree if homogeneous and nonzero, else nullopt.
    std::optional<int> homogeneous_degree() const;
    bool is_constant() const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& other) const;

    Polynomial scaled(std::uint32_t c) const;
    Polynomial times_monomial(const Monomial& m, std::uint32_t c = 1) const;
    Polynomial monic() const;
    Polynomial pow(int e) const;

    // Exact quotient *this / divisor; throws Error if the division does not
    // come out even.
    Polynomial exact_divide_by(const Polynomial& divisor) const;

    bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    // Canonical form: terms in descending degrevlex, coefficients in 0..p-1.
    // Round-trips through parse_polynomial.
    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

// f with x_var replaced by `value` (a polynomial of the same ring).
Polynomial substitute_variable(const Polynomial& f, int var, const Polynomial& value);

}  // namespace egh
