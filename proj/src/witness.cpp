// The witness construction: Γ, the Γ̃ recursion, the monomial ideal it
// certifies, and the liaison arithmetic of Hilbert functions.

#include "egh/witness.hpp"

#include <algorithm>

#include "egh/errors.hpp"

namespace egh {

namespace {

Monomial top_monomial(const CIType& a) {
    std::vector<int> e(std::size_t(a.size()));
    for (int i = 0; i < a.size(); ++i) e[std::size_t(i)] = a[i] - 1;
    return Monomial(std::move(e));
}

}  // namespace

Multicomplex gamma(const CIType& a, const RingPtr& ring) {
    if (a.size() != ring->nvars())
        throw Error("type length must equal the number of variables");
    return Multicomplex::from_monomials(ring, divisors(top_monomial(a)));
}

std::vector<Multicomplex> tilde_gamma_chain(const TypeChain& chain, const RingPtr& ring) {
    if (chain.type(0).size() != ring->nvars())
        throw Error("chain type length must equal the number of variables");
    const int count = chain.length();
    std::vector<Multicomplex> tilde{std::size_t(count)};
    tilde.back() = gamma(chain.type(count - 1), ring);
    for (int k = count - 2; k >= 0; --k) {
        const Monomial top = top_monomial(chain.type(k));
        std::vector<Monomial> kept;
        for (const auto& q : divisors(top))
            if (!tilde[std::size_t(k + 1)].contains(top / q)) kept.push_back(q);
        tilde[std::size_t(k)] = Multicomplex::from_monomials(ring, std::move(kept));
    }
    // every tilde level must itself be a multicomplex
    for (int k = 0; k < count; ++k) {
        auto check = validate_multicomplex(tilde[std::size_t(k)]);
        if (!check.ok)
            throw VerificationError("tilde-gamma level " + std::to_string(k + 1) +
                                    " is not a multicomplex (chain " + chain.to_string() + ")");
    }
    return tilde;
}

MonomialIdeal witness_ideal(const TypeChain& chain, const RingPtr& ring) {
    const auto tilde = tilde_gamma_chain(chain, ring);
    const Multicomplex& gamma1 = tilde.front();
    const CIType& e = chain.type(0);
    const int n = ring->nvars();

    // minimal generators of the complement have exponents ≤ e, so the box
    // enumeration sees all of them
    std::vector<Monomial> nonmembers;
    std::vector<int> exp(std::size_t(n), 0);
    for (;;) {
        Monomial m(exp);
        if (!gamma1.contains(m)) nonmembers.push_back(std::move(m));
        int i = n - 1;
        while (i >= 0 && exp[std::size_t(i)] == e[i]) exp[std::size_t(i--)] = 0;
        if (i < 0) break;
        ++exp[std::size_t(i)];
    }
    MonomialIdeal J = MonomialIdeal::from_generators(ring, std::move(nonmembers));

    // conclusions checked rather than assumed: pure-power containment
    // and the Hilbert function the liaison recursion predicts
    for (int i = 0; i < n; ++i)
        if (!J.contains(Monomial::var(n, i, e[i])))
            throw VerificationError("witness ideal misses x" + std::to_string(i + 1) + "^" +
                                    std::to_string(e[i]) + " (chain " + chain.to_string() + ")");
    HilbertFunction predicted = ci_hilbert(chain.type(chain.length() - 1), n);
    for (int k = chain.length() - 2; k >= 0; --k)
        predicted = liaison_hf(ci_hilbert(chain.type(k), n), predicted);
    if (!(gamma1.hf() == predicted))
        throw VerificationError("witness Hilbert function " + gamma1.hf().to_string() +
                                " differs from the liaison prediction " + predicted.to_string() +
                                " (chain " + chain.to_string() + ")");
    return J;
}

HilbertFunction ci_hilbert(const CIType& a, int n) {
    if (a.size() != n) throw Error("type length must equal the number of variables");
    std::vector<long long> h{1};
    for (int i = 0; i < n; ++i) {
        std::vector<long long> next(h.size() + std::size_t(a[i]) - 1, 0);
        for (std::size_t d = 0; d < h.size(); ++d)
            for (int j = 0; j < a[i]; ++j) next[d + std::size_t(j)] += h[d];
        h = std::move(next);
    }
    return HilbertFunction::artinian(std::move(h));
}

HilbertFunction liaison_hf(const HilbertFunction& hf_J, const HilbertFunction& hf_I) {
    if (!hf_J.artinian() || !hf_I.artinian())
        throw Error("liaison transport needs Artinian Hilbert functions");
    if (!hf_J.is_symmetric())
        throw Error("linking Hilbert function " + hf_J.to_string() + " is not symmetric");
    const int s = hf_J.top_socle_degree();
    const int reach = std::max(s, hf_I.top_socle_degree());
    for (int d = 0; d <= reach; ++d)
        if (hf_I.at(d) > hf_J.at(d))
            throw VerificationError("H(S/I) exceeds H(S/J) in degree " + std::to_string(d) +
                                    ": " + hf_I.to_string() + " vs " + hf_J.to_string());
    std::vector<long long> out(std::size_t(s) + 1, 0);
    for (int t = 0; t <= s; ++t) {
        out[std::size_t(t)] = hf_J.at(t) - hf_I.at(s - t);
        if (out[std::size_t(t)] < 0)
            throw VerificationError("negative liaison entry in degree " + std::to_string(t));
    }
    return HilbertFunction::artinian(std::move(out));
}

}  // namespace egh
