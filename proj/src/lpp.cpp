#include "egh/lpp.hpp"

#include <algorithm>

#include "egh/errors.hpp"

namespace egh {

MonomialIdeal lex_plus_powers(const CIType& e, const HilbertFunction& target,
                              const RingPtr& ring) {
    const int n = ring->nvars();
    const int r = e.size();
    if (r > n) throw Error("more prescribed powers than variables");
    if (!target.artinian()) throw Error("lex-plus-powers target must be Artinian");
    if (target.at(0) != 1)
        throw TargetNotAchievable("target must have value 1 in degree 0");

    const int top = target.top_socle_degree();
    std::vector<std::vector<Monomial>> slices;  // ideal members per degree
    for (int d = 0; d <= top + 1; ++d) {
        auto all = monomials_of_degree(n, d);  // lex descending
        const long long needed = static_cast<long long>(all.size()) - target.at(d);
        if (needed < 0)
            throw TargetNotAchievable("target " + std::to_string(target.at(d)) +
                                      " exceeds the full dimension " +
                                      std::to_string(all.size()) + " in degree " +
                                      std::to_string(d));
        std::vector<Monomial> slice, rest;
        for (auto& m : all) {
            bool forced = false;
            for (int i = 0; i < r && !forced; ++i)
                if (m.exponent(i) >= e[i]) forced = true;
            (forced ? slice : rest).push_back(std::move(m));
        }
        if (static_cast<long long>(slice.size()) > needed)
            throw TargetNotAchievable("power multiples overshoot the target in degree " +
                                      std::to_string(d));
        for (auto& m : rest) {
            if (static_cast<long long>(slice.size()) == needed) break;
            slice.push_back(std::move(m));
        }
        std::sort(slice.begin(), slice.end(), enum_order_less);
        slices.push_back(std::move(slice));
    }

    // a posteriori ideal check: each slice times each variable lands in the
    // next slice
    for (int d = 1; d <= top + 1; ++d) {
        const auto& below = slices[std::size_t(d - 1)];
        const auto& here = slices[std::size_t(d)];
        for (const auto& m : below)
            for (int j = 0; j < n; ++j) {
                Monomial up = m * Monomial::var(n, j);
                if (!std::binary_search(here.begin(), here.end(), up, enum_order_less))
                    throw TargetNotAchievable("slices are not an ideal: " + std::to_string(d) +
                                              " misses a multiple of a degree-" +
                                              std::to_string(d - 1) + " member");
            }
    }

    std::vector<Monomial> gens;
    for (auto& slice : slices)
        for (auto& m : slice) gens.push_back(std::move(m));
    return MonomialIdeal::from_generators(ring, std::move(gens));
}

MonomialIdeal k_lift(const std::vector<MonomialIdeal>& layers, const RingPtr& ring_n) {
    if (layers.empty()) throw Error("the lift needs at least one layer");
    const RingPtr& sub = layers.front().ring();
    for (const auto& M : layers)
        if (!same_ring(M.ring(), sub)) throw Error("layers live in different rings");
    if (ring_n->nvars() != sub->nvars() + 1)
        throw Error("the lift ring must have exactly one more variable");
    if (ring_n->characteristic() != sub->characteristic())
        throw Error("the lift ring must have the same characteristic");

    const int N = int(layers.size()) - 1;
    std::vector<Monomial> gens;
    for (int j = 0; j <= N; ++j)
        for (const auto& m : layers[std::size_t(j)].generators()) {
            std::vector<int> exp = m.exponents();
            exp.push_back(j);
            gens.push_back(Monomial(std::move(exp)));
        }
    MonomialIdeal K = MonomialIdeal::from_generators(ring_n, std::move(gens));

    // for nested ascending layers, check the layered Hilbert identity
    bool nested = true;
    for (int j = 0; j < N && nested; ++j)
        for (const auto& g : layers[std::size_t(j)].generators())
            if (!layers[std::size_t(j + 1)].contains(g)) {
                nested = false;
                break;
            }
    if (nested) {
        int bound = N + 2;
        for (const auto& M : layers)
            for (const auto& g : M.generators()) bound = std::max(bound, g.degree() + N + 2);
        for (int d = 0; d <= bound; ++d) {
            long long lhs = K.quotient_dim(d);
            long long rhs = 0;
            for (int j = 0; j <= d; ++j)
                rhs += layers[std::size_t(std::min(j, N))].quotient_dim(d - j);
            if (lhs != rhs)
                throw VerificationError("lift Hilbert identity fails in degree " +
                                        std::to_string(d) + ": " + std::to_string(lhs) +
                                        " vs " + std::to_string(rhs));
        }
    }
    return K;
}

}  // namespace egh
