#pragma once

#include <random>
#include <vector>

#include "egh/ci_type.hpp"
#include "egh/ideal.hpp"
#include "egh/ideal_ops.hpp"

namespace egh {

// One verified direct link: J is a CI inside both source and target,
// J : source = target and J : target = source.
struct LinkStep {
    Ideal link;    // J
    Ideal source;  // I
    Ideal target;  // I' = J : I
    CIType type;   // type of J
    bool minimal = false;
};

// A sequence of links ending at a complete intersection. The chain never
// asserts the sequentially-bounded theorem — it records whether the
// extracted types happen to violate it.
struct LinkChain {
    std::vector<LinkStep> steps;
    Ideal terminal;  // the CI the chain ends at
    CIType terminal_type;
    bool sequentially_bounded = true;

    // Types of J_1, ..., J_s followed by the terminal type.
    std::vector<CIType> types() const;

    // As a validated TypeChain; throws when not sequentially bounded.
    TypeChain type_chain() const;
};

// Retry budget for each generic choice; exhausting it raises
// GenericityError rather than looping forever.
inline constexpr int kGenericRetries = 5;

// Degree ceiling for regular-sequence extension searches.
inline constexpr int kDegreeSearchGuard = 40;

// Sorted minimal-generator degrees; requires a complete intersection.
CIType ci_type_of(const Ideal& I);

// Direct link of I by the complete intersection J ⊆ I of the same height:
// returns I' = J : I after verifying J : I' = I. Linking an ideal to itself
// is rejected as improper.
LinkStep direct_link(const Ideal& I, const Ideal& J);

struct ContainmentResult {
    CIType degrees;
    // The certified regular sequence realizing the degrees, in order.
    std::vector<Polynomial> sequence;
};

// Greedy minimal containment degrees: a_1 is the least degree of a nonzero
// form of I; each later a_i is the least degree ≥ a_{i-1} at which a random
// form of I extends the regular sequence (colon test), with kGenericRetries
// draws per degree and kDegreeSearchGuard as the ceiling.
ContainmentResult minimal_containment_degrees(const Ideal& I, int r, std::mt19937_64& rng);

// Link by a CI built from the certified minimal regular sequence. Retries
// with fresh randomness when a draw fails verification; an ideal that is
// already CI is rejected (its minimal link would be a self-link).
LinkStep minimal_link(const Ideal& I, std::mt19937_64& rng);

// Repeated minimal links until the current ideal is a complete intersection
// or max_steps is exhausted (ResourceLimitError).
LinkChain minimally_licci_chain(const Ideal& I, std::mt19937_64& rng, int max_steps = 20);

// dim_k of the socle (I : m)/I of an Artinian quotient.
long long socle_dimension(const Ideal& I);

// Socle dimension one.
bool is_gorenstein_artinian(const Ideal& I);

}  // namespace egh
