#include "egh/ideal.hpp"

#include <algorithm>
#include <bit>

#include "egh/errors.hpp"
#include "egh/graded.hpp"
#include "egh/linalg.hpp"

namespace egh {

Ideal Ideal::from_generators(RingPtr ring, std::vector<Polynomial> gens) {
    if (!ring) throw Error("ideal needs a ring");
    std::vector<Polynomial> kept;
    kept.reserve(gens.size());
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!same_ring(g.ring(), ring)) throw Error("ideal generator from a different ring");
        if (!g.is_homogeneous())
            throw Error("ideal generator is not homogeneous: " + g.to_string());
        kept.push_back(std::move(g));
    }
    Ideal I;
    I.ring_ = std::move(ring);
    I.gens_ = std::move(kept);
    I.cache_ = std::make_shared<Cache>();
    return I;
}

const std::vector<Polynomial>& Ideal::groebner(const GroebnerLimits& limits) const {
    std::lock_guard<std::recursive_mutex> lock(cache_->mu);
    if (!cache_->gb) cache_->gb = groebner_basis(gens_, MonomialOrder::degrevlex(), limits);
    return *cache_->gb;
}

const MonomialIdeal& Ideal::initial_ideal() const {
    std::lock_guard<std::recursive_mutex> lock(cache_->mu);
    if (!cache_->initial) {
        std::vector<Monomial> leads;
        for (const auto& g : groebner()) leads.push_back(g.leading_monomial());
        cache_->initial = MonomialIdeal::from_generators(ring_, std::move(leads));
    }
    return *cache_->initial;
}

bool Ideal::is_unit() const {
    const auto& gb = groebner();
    return !gb.empty() && gb.front().is_constant();
}

int Ideal::height() const {
    std::lock_guard<std::recursive_mutex> lock(cache_->mu);
    if (!cache_->height) {
        if (is_unit()) throw Error("height of the unit ideal is undefined");
        const auto& leads = initial_ideal().generators();
        const int n = ring_->nvars();
        // dim(S/I) = dim(S/in I) = the largest coordinate subspace touching
        // no generator support
        int dim = 0;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            bool independent = true;
            for (const auto& m : leads) {
                bool inside = true;
                for (int i = 0; i < n && inside; ++i)
                    if (m.exponent(i) > 0 && ((mask >> i) & 1u) == 0) inside = false;
                if (inside) {
                    independent = false;
                    break;
                }
            }
            if (independent) dim = std::max(dim, std::popcount(mask));
        }
        cache_->height = n - dim;
    }
    return *cache_->height;
}

bool Ideal::artinian() const { return initial_ideal().artinian(); }

HilbertFunction Ideal::hilbert() const {
    std::lock_guard<std::recursive_mutex> lock(cache_->mu);
    if (!cache_->hf) {
        if (!artinian())
            throw Error("quotient is not Artinian; call hilbert_truncated with a degree bound");
        cache_->hf = initial_ideal().hilbert();
    }
    return *cache_->hf;
}

HilbertFunction Ideal::hilbert_truncated(int degree_bound) const {
    if (degree_bound < 0) throw Error("degree bound must be nonnegative");
    const MonomialIdeal& in = initial_ideal();
    std::vector<long long> values;
    values.reserve(std::size_t(degree_bound) + 1);
    for (int d = 0; d <= degree_bound; ++d) values.push_back(in.quotient_dim(d));
    return HilbertFunction::truncated(std::move(values));
}

const std::vector<Polynomial>& Ideal::min_generators() const {
    std::lock_guard<std::recursive_mutex> lock(cache_->mu);
    if (!cache_->min_gens) {
        std::vector<Polynomial> chosen;
        if (is_unit()) {
            chosen.push_back(Polynomial::constant(ring_, 1));
        } else {
            // candidates: the reduced Groebner basis, by ascending degree,
            // ties kept in basis order
            std::vector<Polynomial> cand = groebner();
            std::stable_sort(cand.begin(), cand.end(),
                             [](const Polynomial& a, const Polynomial& b) {
                                 return a.degree() < b.degree();
                             });
            const int n = ring_->nvars();
            std::size_t k = 0;
            while (k < cand.size()) {
                const int d = cand[k].degree();
                // degree-d slice of the ideal the chosen elements generate
                FpRowSpace span(std::size_t(num_monomials(n, d)), ring_->characteristic());
                for (const auto& g : chosen)
                    for (const auto& m : monomials_of_degree(n, d - g.degree()))
                        span.insert(homogeneous_row(n, g.times_monomial(m), d));
                while (k < cand.size() && cand[k].degree() == d) {
                    auto row = homogeneous_row(n, cand[k], d);
                    if (!span.contains(row)) {
                        span.insert(std::move(row));
                        chosen.push_back(cand[k]);
                    }
                    ++k;
                }
            }
        }
        cache_->min_gens = std::move(chosen);
    }
    return *cache_->min_gens;
}

bool Ideal::contains(const Polynomial& f) const {
    if (f.is_zero()) return true;
    if (!same_ring(f.ring(), ring_)) throw Error("membership test across rings");
    return reduces_to_zero(f, groebner(), MonomialOrder::degrevlex());
}

bool Ideal::contains(const Ideal& other) const {
    if (!same_ring(other.ring_, ring_)) throw Error("containment test across rings");
    return std::all_of(other.gens_.begin(), other.gens_.end(),
                       [&](const Polynomial& g) { return contains(g); });
}

bool Ideal::equals(const Ideal& other) const {
    if (!same_ring(ring_, other.ring_)) throw Error("equality test across rings");
    return groebner() == other.groebner();
}

}  // namespace egh
