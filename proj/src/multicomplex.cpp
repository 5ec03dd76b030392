#include "egh/multicomplex.hpp"

#include <algorithm>

#include "egh/errors.hpp"

namespace egh {

Multicomplex Multicomplex::from_monomials(RingPtr ring, std::vector<Monomial> monomials) {
    for (const auto& m : monomials)
        if (m.nvars() != ring->nvars()) throw Error("monomial arity does not match ring");
    std::sort(monomials.begin(), monomials.end(), enum_order_less);
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
    return Multicomplex(std::move(ring), std::move(monomials));
}

bool Multicomplex::contains(const Monomial& m) const {
    return std::binary_search(monos_.begin(), monos_.end(), m, enum_order_less);
}

HilbertFunction Multicomplex::hf() const {
    std::vector<long long> counts;
    for (const auto& m : monos_) {
        if (int(counts.size()) <= m.degree()) counts.resize(std::size_t(m.degree()) + 1, 0);
        ++counts[std::size_t(m.degree())];
    }
    return HilbertFunction::artinian(std::move(counts));
}

bool Multicomplex::operator==(const Multicomplex& other) const {
    return same_ring(ring_, other.ring_) && monos_ == other.monos_;
}

std::vector<Monomial> divisors(const Monomial& m) {
    const int n = m.nvars();
    std::vector<Monomial> out;
    std::vector<int> e(std::size_t(n), 0);
    // odometer over the exponent box
    for (;;) {
        out.push_back(Monomial(e));
        int i = n - 1;
        while (i >= 0 && e[std::size_t(i)] == m.exponent(i)) e[std::size_t(i--)] = 0;
        if (i < 0) break;
        ++e[std::size_t(i)];
    }
    std::sort(out.begin(), out.end(), enum_order_less);
    return out;
}

ValidationResult validate_multicomplex(const std::vector<Monomial>& monomials) {
    std::vector<Monomial> sorted = monomials;
    std::sort(sorted.begin(), sorted.end(), enum_order_less);
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (const auto& m : sorted)
        for (const auto& d : divisors(m))
            if (!std::binary_search(sorted.begin(), sorted.end(), d, enum_order_less))
                return ValidationResult{false, std::make_pair(m, d)};
    return ValidationResult{};
}

ValidationResult validate_multicomplex(const Multicomplex& m) {
    return validate_multicomplex(m.monomials());
}

}  // namespace egh
