#pragma once

#include <vector>

#include "egh/ci_type.hpp"
#include "egh/hilbert.hpp"
#include "egh/monomial_ideal.hpp"
#include "egh/multicomplex.hpp"

namespace egh {

// Γ(a): all divisors of x^(a - 1), the standard monomials of the pure-power
// complete intersection of type a. Requires length(a) = nvars.
Multicomplex gamma(const CIType& a, const RingPtr& ring);

// The recursion behind the witness construction: Γ̃_{s+1} = Γ(a^(s+1)), and
// Γ̃_i = { q ∈ Γ(a^(i)) : x^(a^(i) - 1)/q ∉ Γ̃_{i+1} }. Every returned set
// is verified to be a multicomplex; a failure would contradict the theorem,
// so it raises VerificationError.
std::vector<Multicomplex> tilde_gamma_chain(const TypeChain& chain, const RingPtr& ring);

// The monomial ideal whose standard monomials are exactly Γ̃_1. Verified to
// contain x_i^(e_i) for e = a^(1) and to have the Hilbert function obtained
// by iterating the liaison formula down the chain. A chain can legitimately
// empty out Γ̃_1, in which case the witness is the unit ideal.
MonomialIdeal witness_ideal(const TypeChain& chain, const RingPtr& ring);

// Hilbert function of S modulo the pure powers x_i^(a_i): the convolution
// of (1 + t + ... + t^(a_i - 1)). Symmetric with socle degree |a| - n.
HilbertFunction ci_hilbert(const CIType& a, int n);

// Hilbert function transport under linkage by a Gorenstein CI:
// H(S/(J:I), t) = H(S/J, t) - H(S/I, s - t) with s the socle degree of
// hf_J. Requires hf_J Artinian symmetric and hf_I ≤ hf_J pointwise; a
// violation (or a negative output entry) raises VerificationError.
HilbertFunction liaison_hf(const HilbertFunction& hf_J, const HilbertFunction& hf_I);

}  // namespace egh
