// Buchberger engine: a hand-traced basis, reduction properties, guards,
// determinism, and elimination.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "egh/errors.hpp"
#include "egh/groebner.hpp"
#include "egh/monomial.hpp"
#include "egh/parse.hpp"
#include "egh/polynomial.hpp"
#include "egh/ring.hpp"

using namespace egh;

namespace {
constexpr std::uint32_t kP = 32003;

std::vector<Polynomial> parse_all(const std::vector<std::string>& texts,
                                  const RingPtr& ring) {
    std::vector<Polynomial> out;
    for (const std::string& t : texts) out.push_back(parse_polynomial(t, ring));
    return out;
}

// S-polynomial, for the confluence property check below.
Polynomial s_poly(const Polynomial& f, const Polynomial& g,
                  const MonomialOrder& order) {
    const Monomial& lf = leading_monomial(f, order);
    const Monomial& lg = leading_monomial(g, order);
    const Monomial l = lcm(lf, lg);
    return f.monic().times_monomial(l / lf) - g.monic().times_monomial(l / lg);
}
}  // namespace

TEST_CASE("hand-traced reduced basis") {
    // <x1^2 - x2*x3, x1*x2>: the single S-pair gives x2^2*x3; everything
    // else reduces. Reduced basis worked out by hand.
    const RingPtr ring = RingContext::make_default(3, kP);
    const std::vector<Polynomial> gb = groebner_basis(
        parse_all({"x1^2 - x2*x3", "x1*x2"}, ring), MonomialOrder::degrevlex());
    REQUIRE(gb.size() == 3);
    CHECK(gb[0].to_string() == "x2^2*x3");
    CHECK(gb[1].to_string() == "x1^2 + 32002*x2*x3");
    CHECK(gb[2].to_string() == "x1*x2");
}

TEST_CASE("monomial input returns the minimal monomial basis") {
    const RingPtr ring = RingContext::make_default(2, kP);
    const std::vector<Polynomial> gb = groebner_basis(
        parse_all({"x1^2", "x1*x2", "x1^2*x2"}, ring), MonomialOrder::degrevlex());
    REQUIRE(gb.size() == 2);
    CHECK(gb[0].to_string() == "x1^2");
    CHECK(gb[1].to_string() == "x1*x2");
}

TEST_CASE("unit ideal collapses to {1}") {
    const RingPtr ring = RingContext::make_default(2, kP);
    const std::vector<Polynomial> gb = groebner_basis(
        parse_all({"x1", "x1 + 1"}, ring), MonomialOrder::degrevlex());
    REQUIRE(gb.size() == 1);
    CHECK(gb[0].to_string() == "1");
}

TEST_CASE("empty and zero input give the zero basis") {
    const RingPtr ring = RingContext::make_default(2, kP);
    CHECK(groebner_basis({}, MonomialOrder::degrevlex()).empty());
    CHECK(groebner_basis({Polynomial::constant(ring, 0)}, MonomialOrder::degrevlex())
              .empty());
}

TEST_CASE("normal form and membership") {
    const RingPtr ring = RingContext::make_default(3, kP);
    const std::vector<Polynomial> gb = groebner_basis(
        parse_all({"x1^2 - x2*x3", "x1*x2"}, ring), MonomialOrder::degrevlex());
    const MonomialOrder ord = MonomialOrder::degrevlex();
    // x1^3 = x1*(x1^2 - x2*x3) + x3*(x1*x2), so it reduces to zero; the
    // tail x2*x3 survives untouched.
    CHECK(normal_form(parse_polynomial("x1^3 + x2*x3", ring), gb, ord).to_string() ==
          "x2*x3");
    CHECK(reduces_to_zero(parse_polynomial("x1^3", ring), gb, ord));
    CHECK(reduces_to_zero(parse_polynomial("x1^2*x2", ring), gb, ord));
    CHECK(reduces_to_zero(parse_polynomial("x2^2*x3", ring), gb, ord));
    CHECK_FALSE(reduces_to_zero(parse_polynomial("x2*x3", ring), gb, ord));
    // The normal form of a normal form is itself.
    const Polynomial nf = normal_form(parse_polynomial("x1^4 + x2^2", ring), gb, ord);
    CHECK(normal_form(nf, gb, ord) == nf);
}

TEST_CASE("every S-polynomial of the returned basis reduces to zero") {
    const RingPtr ring = RingContext::make_default(3, kP);
    const MonomialOrder ord = MonomialOrder::degrevlex();
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Polynomial> gens;
        for (int g = 0; g < 3; ++g) {
            std::vector<Term> terms;
            const int d = 1 + int(rng() % 3);
            for (const Monomial& m : monomials_of_degree(3, d)) {
                const std::uint32_t c = std::uint32_t(rng() % kP);
                if (c && rng() % 2 == 0) terms.push_back(Term{m, c});
            }
            gens.push_back(Polynomial::from_terms(ring, terms));
        }
        const std::vector<Polynomial> gb = groebner_basis(gens, ord);
        for (std::size_t i = 0; i < gb.size(); ++i)
            for (std::size_t j = i + 1; j < gb.size(); ++j) {
                if (gb[i].is_constant() || gb[j].is_constant()) continue;
                CHECK(normal_form(s_poly(gb[i], gb[j], ord), gb, ord).is_zero());
            }
        // And the inputs are members of their own ideal.
        for (const Polynomial& g : gens) CHECK(reduces_to_zero(g, gb, ord));
    }
}

TEST_CASE("deterministic output") {
    const RingPtr ring = RingContext::make_default(3, kP);
    const std::vector<Polynomial> gens =
        parse_all({"x1^2 - x2*x3", "x1*x2 - x3^2", "x2^2 - x1*x3"}, ring);
    const std::vector<Polynomial> a = groebner_basis(gens, MonomialOrder::degrevlex());
    const std::vector<Polynomial> b = groebner_basis(gens, MonomialOrder::degrevlex());
    CHECK(a == b);
}

TEST_CASE("degree guard raises ResourceLimitError") {
    const RingPtr ring = RingContext::make_default(3, kP);
    GroebnerLimits limits;
    limits.max_spair_degree = 2;  // the needed S-pair has degree 3
    CHECK_THROWS_AS(groebner_basis(parse_all({"x1^2 - x2*x3", "x1*x2"}, ring),
                                   MonomialOrder::degrevlex(), limits),
                    ResourceLimitError);
}

TEST_CASE("elimination order computes an elimination ideal") {
    // <x1 - x2^2, x1*x3>: eliminating x1 leaves <x2^2*x3>.
    const RingPtr ring = RingContext::make_default(3, kP);
    const std::vector<Polynomial> gb =
        groebner_basis(parse_all({"x1 - x2^2", "x1*x3"}, ring),
                       MonomialOrder::elimination_block(1));
    bool found = false;
    for (const Polynomial& g : gb) {
        if (leading_monomial(g, MonomialOrder::elimination_block(1)).exponent(0) > 0)
            continue;
        CHECK(g.to_string() == "x2^2*x3");
        found = true;
    }
    CHECK(found);
}

TEST_CASE("basis is stable across generator scaling") {
    // The reduced basis is unique, so scaling generators cannot change it.
    const RingPtr ring = RingContext::make_default(2, kP);
    const std::vector<Polynomial> a = groebner_basis(
        parse_all({"x1^2 + x2^2", "x1*x2"}, ring), MonomialOrder::degrevlex());
    const std::vector<Polynomial> b = groebner_basis(
        parse_all({"7*x1^2 + 7*x2^2", "5*x1*x2"}, ring), MonomialOrder::degrevlex());
    CHECK(a == b);
}
