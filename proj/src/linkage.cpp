// Direct links, minimal links, and the chain driver. Everything a step
// claims about itself is recomputed and verified before the step is
// returned; genericity is retried a bounded number of times and then
// reported, never silently.

#include "egh/linkage.hpp"

#include <algorithm>
#include <sstream>

#include "egh/errors.hpp"

namespace egh {

std::vector<CIType> LinkChain::types() const {
    std::vector<CIType> out;
    out.reserve(steps.size() + 1);
    for (const auto& step : steps) out.push_back(step.type);
    out.push_back(terminal_type);
    return out;
}

TypeChain LinkChain::type_chain() const { return TypeChain(types()); }

CIType ci_type_of(const Ideal& I) {
    if (!is_complete_intersection(I))
        throw Error("CI type requested for an ideal that is not a complete intersection");
    std::vector<int> degrees;
    for (const auto& g : I.min_generators()) degrees.push_back(g.degree());
    return CIType(std::move(degrees));
}

LinkStep direct_link(const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring(), J.ring())) throw Error("link across rings");
    if (I.is_unit() || J.is_unit()) throw Error("links are between proper ideals");
    if (!is_complete_intersection(J))
        throw Error("link ideal is not a complete intersection");
    if (!I.contains(J)) throw Error("link ideal is not contained in the source");
    if (J.height() != I.height())
        throw Error("link ideal height " + std::to_string(J.height()) +
                    " differs from source height " + std::to_string(I.height()));
    if (I.equals(J)) throw Error("linking an ideal to itself is improper");

    Ideal target = colon(J, I);
    Ideal back = colon(J, target);
    if (!back.equals(I))
        throw VerificationError("double-colon check failed: J : (J : I) differs from I");
    if (!target.contains(J))
        throw VerificationError("link ideal escaped the target");  // cannot happen honestly
    return LinkStep{J, I, target, ci_type_of(J), false};
}

ContainmentResult minimal_containment_degrees(const Ideal& I, int r, std::mt19937_64& rng) {
    if (r < 1) throw Error("need at least one containment degree");
    if (I.is_unit() || I.is_zero()) throw Error("containment degrees need a proper nonzero ideal");
    if (I.height() < r)
        throw Error("height " + std::to_string(I.height()) + " is below the requested length " +
                    std::to_string(r));

    std::vector<int> degrees;
    std::vector<Polynomial> sequence;
    std::vector<Polynomial> partial;  // generators of <f_1..f_{i-1}>
    int d = 0;
    // least degree of a nonzero form of I
    while (d <= kDegreeSearchGuard && degree_basis(I, d).empty()) ++d;
    for (int i = 0; i < r; ++i) {
        bool extended = false;
        while (d <= kDegreeSearchGuard && !extended) {
            if (degree_basis(I, d).empty()) {
                ++d;
                continue;
            }
            Ideal prev = Ideal::from_generators(I.ring(), partial);
            const auto try_extend = [&](Polynomial f) {
                if (f.is_zero()) return;
                if (!colon(prev, f).equals(prev)) return;
                degrees.push_back(d);
                sequence.push_back(f);
                partial.push_back(std::move(f));
                extended = true;
            };
            for (int attempt = 0; attempt < kGenericRetries && !extended; ++attempt)
                try_extend(random_element(I, d, rng));
            // Over a tiny field the random draws can miss every
            // nonzerodivisor in the component even when one exists. When
            // the component is small enough, sweep it entirely, so that
            // moving on to the next degree is a certainty and not a guess.
            if (!extended) {
                const std::vector<Polynomial> basis = degree_basis(I, d);
                const std::uint64_t p = I.ring()->characteristic();
                std::uint64_t combos = 1;
                for (std::size_t k = 0; k < basis.size() && combos <= 1024; ++k)
                    combos *= p;
                if (combos <= 1024) {
                    std::vector<std::uint32_t> c(basis.size(), 0);
                    while (!extended) {
                        std::size_t pos = 0;
                        while (pos < c.size() && ++c[pos] == p) c[pos++] = 0;
                        if (pos == c.size()) break;  // wrapped around: done
                        Polynomial f = Polynomial::constant(I.ring(), 0);
                        for (std::size_t k = 0; k < basis.size(); ++k)
                            if (c[k]) f = f + basis[k].scaled(c[k]);
                        try_extend(std::move(f));
                    }
                }
            }
            if (!extended) ++d;  // the next a_i continues from this degree
        }
        if (!extended) {
            std::ostringstream msg;
            msg << "no regular-sequence extension found through degree " << kDegreeSearchGuard
                << " after " << kGenericRetries << " draws per degree; partial degrees (";
            for (std::size_t k = 0; k < degrees.size(); ++k)
                msg << (k ? "," : "") << degrees[k];
            msg << ")";
            throw GenericityError(msg.str());
        }
    }
    return ContainmentResult{CIType(std::move(degrees)), std::move(sequence)};
}

LinkStep minimal_link(const Ideal& I, std::mt19937_64& rng) {
    if (I.is_unit() || I.is_zero()) throw Error("minimal link needs a proper nonzero ideal");
    if (I.height() < 1) throw Error("minimal link needs positive height");
    if (is_complete_intersection(I))
        throw Error("ideal is already a complete intersection; its minimal link is a self-link");

    const int r = I.height();
    std::string last_failure;
    for (int attempt = 0; attempt < kGenericRetries; ++attempt) {
        ContainmentResult found = minimal_containment_degrees(I, r, rng);
        Ideal J = Ideal::from_generators(I.ring(), found.sequence);
        try {
            if (!is_complete_intersection(J))
                throw VerificationError("certified sequence did not generate a CI");
            LinkStep step = direct_link(I, J);
            step.minimal = true;
            return step;
        } catch (const VerificationError& ex) {
            last_failure = ex.what();
        }
    }
    throw GenericityError("minimal link failed " + std::to_string(kGenericRetries) +
                          " times; last failure: " + last_failure);
}

LinkChain minimally_licci_chain(const Ideal& I, std::mt19937_64& rng, int max_steps) {
    if (I.is_unit() || I.is_zero()) throw Error("chain needs a proper nonzero ideal");
    std::vector<LinkStep> steps;
    Ideal current = I;
    while (!is_complete_intersection(current)) {
        if (int(steps.size()) >= max_steps)
            throw ResourceLimitError("no complete intersection within " +
                                     std::to_string(max_steps) + " links");
        LinkStep step = minimal_link(current, rng);
        current = step.target;
        steps.push_back(std::move(step));
    }
    CIType terminal_type = ci_type_of(current);
    bool bounded = true;
    const CIType* above = nullptr;
    for (const auto& step : steps) {
        if (above && !above->componentwise_geq(step.type)) bounded = false;
        above = &step.type;
    }
    if (above && !above->componentwise_geq(terminal_type)) bounded = false;
    return LinkChain{std::move(steps), std::move(current), std::move(terminal_type), bounded};
}

long long socle_dimension(const Ideal& I) {
    if (!I.artinian()) throw Error("socle dimension needs an Artinian quotient");
    std::vector<Polynomial> vars;
    for (int i = 0; i < I.ring()->nvars(); ++i)
        vars.push_back(Polynomial::variable(I.ring(), i));
    Ideal m = Ideal::from_generators(I.ring(), std::move(vars));
    return I.hilbert().total() - colon(I, m).hilbert().total();
}

bool is_gorenstein_artinian(const Ideal& I) { return socle_dimension(I) == 1; }

}  // namespace egh
