#pragma once

#include "egh/linkage.hpp"

namespace egh {

// Result of transporting a link modulo a linear form g: the three ideals
// formed in the ambient ring S, plus the verified link step in the
// (n-1)-variable ring S/<g> after the deterministic variable elimination.
struct ModLinResult {
    Ideal I1_prime;  // (I1 : g^j) + <g>  in S
    Ideal I2_prime;  // (I2 : g^j) + <g>  in S
    Ideal J_prime;   // J + <g>           in S
    int substituted_var = 0;      // index eliminated when descending
    LinkStep quotient_step;       // the link in the contracted ring
};

// Transport of a link along a linear form: requires I1 ~ I2 via the CI J (all four
// identities re-verified) and g a linear non-zero-divisor on S/J; forms
// I_i' = (I_i : g^j) + <g> and J' = J + <g>, verifies the linkage
// identities in S, then descends through S/<g> ≅ k[x_1..x_{n-1}] by
// solving g for its highest-index variable, and verifies the link again
// downstairs.
ModLinResult mod_linear_form(const Ideal& I1, const Ideal& I2, const Ideal& J,
                             const Polynomial& g, int j);

}  // namespace egh
