#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "egh/ci_type.hpp"
#include "egh/ideal.hpp"

namespace egh {

// Deterministic instance generators shared by the selftest suites and the
// acceptance harness.  All randomness flows through the caller's engine.

// Homogeneous form with coefficients drawn uniformly from F_p (possibly
// the zero polynomial if every draw lands on 0).
Polynomial random_form(const RingPtr& ring, int degree, std::mt19937_64& rng);

// Artinian complete intersection: generator i is x_i^{a_i} plus a random
// mix of the other degree-a_i monomials.  Verified against ci_hilbert;
// GenericityError after repeated degenerate draws.
Ideal random_artinian_ci(const RingPtr& ring, const CIType& type,
                         std::mt19937_64& rng);

// Complete intersection of the given height spanned by fully random forms
// of the given degrees (non-Artinian when height < nvars).  Verified via
// height and minimal generator count; GenericityError on repeated failure.
Ideal random_proper_ci(const RingPtr& ring, const std::vector<int>& degrees,
                       int height, std::mt19937_64& rng);

// A proper height-2 linkage instance in >= 3 variables.  J is a complete
// intersection of two split quadrics L1*L1' and L2*L2' (four lines); the
// line ideal (L1, L2) and its residual are linked via J.  The pair is
// verified to stabilize under the double colon.  A generic quadric is a
// nonzerodivisor on S/J, so fully random data almost never links properly;
// the split shape is what makes proper links abundant.
struct LinkagePair {
    Ideal J;
    Ideal I1;
    Ideal I2;
};
LinkagePair random_split_linkage(const RingPtr& ring, std::mt19937_64& rng);

struct SuiteResult {
    std::string name;
    bool passed = true;
    int checks = 0;
    std::vector<std::string> failures;
    std::vector<std::string> warnings;  // genericity caveats, not failures
};

struct SelftestResult {
    std::vector<SuiteResult> suites;
    bool all_passed() const;
    int total_checks() const;
    int total_warnings() const;
};

// The exhaustive small-instance suites: multicomplex recursion, Gröbner vs
// liaison arithmetic, Pfaffian pipeline, lex-plus-powers equivalence, and
// mod-linear-form transport.  Small primes may trigger genericity
// warnings; those are reported but do not fail a suite.
SelftestResult run_selftest(std::uint32_t prime, std::uint64_t seed);

}  // namespace egh
