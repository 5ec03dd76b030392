#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "egh/groebner.hpp"
#include "egh/hilbert.hpp"
#include "egh/monomial_ideal.hpp"
#include "egh/polynomial.hpp"
#include "egh/ring.hpp"

namespace egh {

// Homogeneous ideal: generator list plus lazily computed derived data
// (reduced degrevlex Groebner basis, initial ideal, height, Hilbert
// function, minimal generators). Values are immutable; the cache is shared
// between copies and filled idempotently under a lock, so concurrent reads
// are safe.
//
// An ideal may be the unit ideal when an operation's return contract says
// so (a colon can collapse); query is_unit() before structural questions.
class Ideal {
public:
    Ideal() = default;

    // Drops zero generators; every generator must be homogeneous.
    static Ideal from_generators(RingPtr ring, std::vector<Polynomial> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    // Reduced degrevlex Groebner basis (cached).
    const std::vector<Polynomial>& groebner(const GroebnerLimits& limits = {}) const;

    // Initial ideal for degrevlex (cached).
    const MonomialIdeal& initial_ideal() const;

    bool is_unit() const;
    bool is_zero() const { return gens_.empty(); }
    bool is_proper() const { return !is_unit(); }

    // n - dim(S/I), via the initial ideal; requires a proper ideal.
    int height() const;

    bool artinian() const;

    // Full Hilbert function for Artinian quotients (cached); otherwise the
    // explicit degree bound is mandatory.
    HilbertFunction hilbert() const;
    HilbertFunction hilbert_truncated(int degree_bound) const;

    // A minimal homogeneous generating set (cached). The cardinality is
    // well-defined; the set itself depends on the fixed selection rule.
    const std::vector<Polynomial>& min_generators() const;

    bool contains(const Polynomial& f) const;
    bool contains(const Ideal& other) const;

    // Exact ideal equality via reduced Groebner bases.
    bool equals(const Ideal& other) const;

private:
    struct Cache {
        std::recursive_mutex mu;
        std::optional<std::vector<Polynomial>> gb;
        std::optional<MonomialIdeal> initial;
        std::optional<int> height;
        std::optional<HilbertFunction> hf;
        std::optional<std::vector<Polynomial>> min_gens;
    };

    RingPtr ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

}  // namespace egh
