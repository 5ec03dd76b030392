// Transport of a direct link modulo a linear non-zero-divisor, with exact
// verification before and after the descent to the smaller ring.

#include "egh/modlin.hpp"

#include "egh/errors.hpp"
#include "egh/fp.hpp"

namespace egh {

namespace {

// Rebuild f (which no longer involves x_var) in the contracted ring.
Polynomial contract_poly(const RingPtr& contracted, const Polynomial& f, int var) {
    std::vector<Term> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        if (t.mono.exponent(var) != 0)
            throw Error("polynomial still involves the eliminated variable");
        std::vector<int> e;
        e.reserve(std::size_t(t.mono.nvars() - 1));
        for (int i = 0; i < t.mono.nvars(); ++i)
            if (i != var) e.push_back(t.mono.exponent(i));
        terms.push_back(Term{Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(contracted, std::move(terms));
}

Ideal descend(const Ideal& I, const Polynomial& replacement, int var,
              const RingPtr& contracted) {
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators())
        gens.push_back(contract_poly(contracted, substitute_variable(g, var, replacement), var));
    return Ideal::from_generators(contracted, std::move(gens));
}

}  // namespace

ModLinResult mod_linear_form(const Ideal& I1, const Ideal& I2, const Ideal& J,
                             const Polynomial& g, int j) {
    const RingPtr& ring = I1.ring();
    if (!same_ring(ring, I2.ring()) || !same_ring(ring, J.ring()))
        throw Error("transport across rings");
    if (j < 0) throw Error("negative colon exponent");
    if (g.is_zero() || !g.is_homogeneous() || g.degree() != 1)
        throw Error("g must be a nonzero linear form");
    if (ring->nvars() < 2) throw Error("descending needs at least two variables");

    // the hypothesis I1 ~ I2 via J, re-verified
    if (!is_complete_intersection(J)) throw Error("J is not a complete intersection");
    if (!I1.contains(J) || !I2.contains(J)) throw Error("J is not contained in both ideals");
    if (!colon(J, I1).equals(I2) || !colon(J, I2).equals(I1))
        throw VerificationError("I1 and I2 are not directly linked by J");

    // g must be a non-zero-divisor on S/J
    if (!colon(J, g).equals(J))
        throw Error("g is a zero-divisor on S/J (J : g differs from J)");

    Ideal I1p = add(colon(I1, g.pow(j)), g);
    Ideal I2p = add(colon(I2, g.pow(j)), g);
    Ideal Jp = add(J, g);

    // the three transported identities, in S
    if (!colon(Jp, I1p).equals(I2p) || !colon(Jp, I2p).equals(I1p))
        throw VerificationError("transported colon identities fail in the ambient ring");
    if (!I1p.contains(Jp) || !I2p.contains(Jp))
        throw VerificationError("J' escaped the transported ideals");

    // descend: solve g = 0 for its highest-index variable
    int var = -1;
    std::uint32_t c = 0;
    for (const auto& t : g.terms())
        for (int i = 0; i < ring->nvars(); ++i)
            if (t.mono.exponent(i) == 1 && i > var) {
                var = i;
                c = t.coeff;
            }
    const std::uint32_t p = ring->characteristic();
    // replacement = -c^{-1} (g - c x_var)
    Polynomial replacement =
        (g - Polynomial::variable(ring, var).scaled(c)).scaled(fp_neg(fp_inv(c, p), p));
    RingPtr contracted = contract_without_var(ring, var);

    Ideal I1q = descend(I1p, replacement, var, contracted);
    Ideal Jq = descend(Jp, replacement, var, contracted);
    Ideal I2q = descend(I2p, replacement, var, contracted);

    LinkStep step = direct_link(I1q, Jq);
    if (!step.target.equals(I2q))
        throw VerificationError("descended link target differs from the descended I2'");
    return ModLinResult{std::move(I1p), std::move(I2p), std::move(Jp), var, std::move(step)};
}

}  // namespace egh
