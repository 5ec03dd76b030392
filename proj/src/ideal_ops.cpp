// Ideal arithmetic built on the Groebner engine: sums, intersections via tag
// elimination, colons, saturation, and graded linear algebra.

#include "egh/ideal_ops.hpp"

#include <map>

#include "egh/errors.hpp"
#include "egh/graded.hpp"
#include "egh/linalg.hpp"

namespace egh {

namespace {

// Same polynomial in the tag-extended ring (tag exponent zero).
Polynomial lift_to_ext(const RingPtr& ext, const Polynomial& f) {
    std::vector<Term> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        std::vector<int> e;
        e.reserve(std::size_t(ext->nvars()));
        e.push_back(0);
        e.insert(e.end(), t.mono.exponents().begin(), t.mono.exponents().end());
        terms.push_back(Term{Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(ext, std::move(terms));
}

// Strip the tag coordinate from a tag-free polynomial.
Polynomial drop_tag(const RingPtr& base, const Polynomial& f) {
    std::vector<Term> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        std::vector<int> e(t.mono.exponents().begin() + 1, t.mono.exponents().end());
        terms.push_back(Term{Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(base, std::move(terms));
}

std::vector<Polynomial> homogeneous_components(const Polynomial& f) {
    std::map<int, std::vector<Term>> slices;
    for (const auto& t : f.terms()) slices[t.mono.degree()].push_back(t);
    std::vector<Polynomial> out;
    out.reserve(slices.size());
    for (auto& [d, terms] : slices) out.push_back(Polynomial::from_terms(f.ring(), std::move(terms)));
    return out;
}

}  // namespace

Ideal add(const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring(), J.ring())) throw Error("ideal sum across rings");
    std::vector<Polynomial> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return Ideal::from_generators(I.ring(), std::move(gens));
}

Ideal add(const Ideal& I, const Polynomial& f) {
    std::vector<Polynomial> gens = I.generators();
    gens.push_back(f);
    return Ideal::from_generators(I.ring(), std::move(gens));
}

Ideal intersect(const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring(), J.ring())) throw Error("intersection across rings");
    const RingPtr& ring = I.ring();
    if (I.is_zero() || J.is_zero()) return Ideal::from_generators(ring, {});

    RingPtr ext = extend_with_tag(ring);
    const Polynomial t = Polynomial::variable(ext, 0);
    const Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
    std::vector<Polynomial> gens;
    gens.reserve(I.generators().size() + J.generators().size());
    for (const auto& g : I.generators()) gens.push_back(t * lift_to_ext(ext, g));
    for (const auto& h : J.generators()) gens.push_back(one_minus_t * lift_to_ext(ext, h));

    const MonomialOrder order = MonomialOrder::elimination_block(1);
    auto gb = groebner_basis(gens, order);

    // tag-free leading monomial means the whole element is tag-free
    std::vector<Polynomial> kept;
    for (const auto& g : gb) {
        if (leading_monomial(g, order).exponent(0) != 0) continue;
        for (auto& comp : homogeneous_components(drop_tag(ring, g)))
            kept.push_back(std::move(comp));
    }
    return Ideal::from_generators(ring, std::move(kept));
}

Ideal colon(const Ideal& I, const Polynomial& f) {
    if (f.is_zero()) throw Error("colon by the zero polynomial");
    if (!same_ring(f.ring(), I.ring())) throw Error("colon across rings");
    if (!f.is_homogeneous()) throw Error("colon divisor must be homogeneous");
    Ideal K = intersect(I, Ideal::from_generators(I.ring(), {f}));
    std::vector<Polynomial> quotients;
    quotients.reserve(K.generators().size());
    for (const auto& g : K.generators()) quotients.push_back(g.exact_divide_by(f));
    return Ideal::from_generators(I.ring(), std::move(quotients));
}

Ideal colon(const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring(), J.ring())) throw Error("colon across rings");
    if (J.is_zero())
        return Ideal::from_generators(I.ring(), {Polynomial::constant(I.ring(), 1)});
    bool first = true;
    Ideal result;
    for (const auto& g : J.generators()) {
        Ideal single = colon(I, g);
        result = first ? single : intersect(result, single);
        first = false;
    }
    return result;
}

std::pair<Ideal, int> saturate(const Ideal& I, const Polynomial& f) {
    Ideal current = I;
    int exponent = 0;
    for (;;) {
        Ideal next = colon(current, f);
        if (next.equals(current)) return {current, exponent};
        current = std::move(next);
        ++exponent;
    }
}

std::vector<Polynomial> degree_basis(const Ideal& I, int d) {
    if (d < 0) throw Error("degree must be nonnegative");
    const int n = I.ring()->nvars();
    FpRowSpace rows(std::size_t(num_monomials(n, d)), I.ring()->characteristic());
    for (const auto& g : I.groebner()) {
        if (g.degree() > d) continue;
        for (const auto& m : monomials_of_degree(n, d - g.degree()))
            rows.insert(homogeneous_row(n, g.times_monomial(m), d));
    }
    std::vector<Polynomial> basis;
    basis.reserve(rows.rank());
    for (const auto& row : rows.rows()) basis.push_back(row_to_polynomial(I.ring(), row, d));
    return basis;
}

Polynomial random_element(const Ideal& I, int d, std::mt19937_64& rng) {
    const std::uint32_t p = I.ring()->characteristic();
    Polynomial out(I.ring());
    for (const auto& b : degree_basis(I, d)) out = out + b.scaled(std::uint32_t(rng() % p));
    return out;
}

bool is_complete_intersection(const Ideal& I) {
    if (I.is_unit()) return false;
    return int(I.min_generators().size()) == I.height();
}

}  // namespace egh
