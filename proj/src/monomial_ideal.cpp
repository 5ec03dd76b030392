#include "egh/monomial_ideal.hpp"

#include <algorithm>

#include "egh/errors.hpp"
#include "egh/ideal.hpp"
#include "egh/polynomial.hpp"

namespace egh {

MonomialIdeal MonomialIdeal::from_generators(RingPtr ring, std::vector<Monomial> gens) {
    for (const auto& g : gens)
        if (g.nvars() != ring->nvars()) throw Error("monomial arity does not match ring");
    std::sort(gens.begin(), gens.end(), enum_order_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // keep the divisibility antichain: enumeration order is degree-compatible,
    // so earlier generators can only divide later ones
    std::vector<Monomial> minimal;
    for (auto& g : gens) {
        bool covered = std::any_of(minimal.begin(), minimal.end(),
                                   [&](const Monomial& m) { return m.divides(g); });
        if (!covered) minimal.push_back(std::move(g));
    }
    return MonomialIdeal(std::move(ring), std::move(minimal));
}

bool MonomialIdeal::is_unit() const {
    return gens_.size() == 1 && gens_.front().is_one();
}

bool MonomialIdeal::contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const Monomial& g) { return g.divides(m); });
}

long long MonomialIdeal::quotient_dim(int d) const {
    long long count = 0;
    for (const auto& m : monomials_of_degree(ring_->nvars(), d))
        if (!contains(m)) ++count;
    return count;
}

std::optional<int> MonomialIdeal::pure_power(int var) const {
    for (const auto& g : gens_) {
        if (g.exponent(var) == 0) continue;
        bool pure = g.exponent(var) == g.degree();
        if (pure) return g.degree();
    }
    return std::nullopt;
}

bool MonomialIdeal::artinian() const {
    if (is_unit()) return true;
    for (int i = 0; i < ring_->nvars(); ++i)
        if (!pure_power(i)) return false;
    return true;
}

std::vector<Monomial> MonomialIdeal::standard_monomials() const {
    if (!artinian()) throw Error("standard monomial set is infinite (non-Artinian)");
    std::vector<Monomial> out;
    if (is_unit()) return out;
    // standard monomials live under the pure-power box
    int bound = 0;
    for (int i = 0; i < ring_->nvars(); ++i) bound += *pure_power(i) - 1;
    for (int d = 0; d <= bound; ++d)
        for (const auto& m : monomials_of_degree(ring_->nvars(), d))
            if (!contains(m)) out.push_back(m);
    return out;
}

HilbertFunction MonomialIdeal::hilbert() const {
    if (!artinian()) throw Error("Hilbert function of a non-Artinian monomial ideal needs a degree bound");
    std::vector<long long> values;
    if (is_unit()) return HilbertFunction::artinian(std::move(values));
    int bound = 0;
    for (int i = 0; i < ring_->nvars(); ++i) bound += *pure_power(i) - 1;
    for (int d = 0; d <= bound; ++d) values.push_back(quotient_dim(d));
    return HilbertFunction::artinian(std::move(values));
}

Ideal MonomialIdeal::to_ideal() const {
    std::vector<Polynomial> gens;
    gens.reserve(gens_.size());
    for (const auto& m : gens_) gens.push_back(Polynomial::monomial(ring_, m));
    return Ideal::from_generators(ring_, std::move(gens));
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
    return same_ring(ring_, other.ring_) && gens_ == other.gens_;
}

}  // namespace egh
