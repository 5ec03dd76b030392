#pragma once

#include <optional>
#include <string>

#include "egh/linkage.hpp"
#include "egh/monomial_ideal.hpp"
#include "egh/witness.hpp"

namespace egh {

// Outcome of the end-to-end witness pipeline. `pass` summarizes the checks
// the theorem promises: the chain's first type equals the minimal
// containment degrees, the witness contains the pure powers x_i^(e_i), and
// H(S/witness) = H(S/I). A failure is data, not an exception — the caller
// sees which check broke and on which chain.
struct EghResult {
    bool pass = false;
    std::string failure;  // empty when pass

    CIType e;  // minimal containment degrees of I
    LinkChain chain;
    std::optional<MonomialIdeal> witness;
    HilbertFunction hf_input;
    HilbertFunction hf_witness;  // zero when no witness was constructed
};

// The full certificate pipeline: e = minimal_containment_degrees(I, n), a minimal
// licci chain, its type chain, the witness ideal, and the Hilbert-function
// and power-containment assertions. Requires an Artinian input; structural
// errors (chain failure, genericity exhaustion) propagate as exceptions,
// while assertion mismatches come back as a failed result.
EghResult egh_pipeline(const Ideal& I, std::mt19937_64& rng, int max_steps = 20);

}  // namespace egh
