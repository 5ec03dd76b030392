// Field arithmetic, monomials and orders, polynomial arithmetic, the
// parser, and Hilbert-function plumbing.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "egh/errors.hpp"
#include "egh/fp.hpp"
#include "egh/hilbert.hpp"
#include "egh/monomial.hpp"
#include "egh/parse.hpp"
#include "egh/polynomial.hpp"
#include "egh/ring.hpp"

using namespace egh;

namespace {
constexpr std::uint32_t kP = 32003;

Polynomial pp(const std::string& text, const RingPtr& ring) {
    return parse_polynomial(text, ring);
}
}  // namespace

TEST_CASE("F_p arithmetic against frozen values") {
    // Independently computed: 2^-1, a product, powers, a negation.
    CHECK(fp_inv(2, kP) == 16002);
    CHECK(fp_mul(2, 16002, kP) == 1);
    CHECK(fp_mul(31859, 2417, kP) == 3985);
    CHECK(fp_pow(3, 7, kP) == 2187);
    CHECK(fp_pow(3, kP - 1, kP) == 1);  // Fermat
    CHECK(fp_neg(5, kP) == 31998);
    CHECK(fp_inv(7, kP) == 4572);
    CHECK(fp_from_ll(-5, kP) == 31998);
    CHECK(fp_from_ll(2 * (long long)kP + 3, kP) == 3);
    CHECK_THROWS_AS(fp_inv(0, kP), Error);
}

TEST_CASE("F_p inverse is total on nonzero elements of a small field") {
    for (std::uint32_t a = 1; a < 101; ++a) CHECK(fp_mul(a, fp_inv(a, 101), 101) == 1);
}

TEST_CASE("primality test") {
    CHECK(is_prime(2));
    CHECK(is_prime(32003));
    CHECK(is_prime(101));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));  // 7 * 13
    CHECK_FALSE(is_prime(32001));
}

TEST_CASE("ring context basics") {
    const RingPtr ring = RingContext::make_default(3, kP);
    CHECK(ring->nvars() == 3);
    CHECK(ring->var_name(0) == "x1");
    CHECK(ring->var_index("x3") == 2);
    CHECK(ring->var_index("y") == -1);
    const RingPtr named = RingContext::make(2, 7, {"a", "b"});
    CHECK(named->var_index("b") == 1);
    CHECK_FALSE(same_ring(ring, named));

    const RingPtr tagged = extend_with_tag(ring);
    CHECK(tagged->nvars() == 4);
    CHECK(tagged->var_name(1) == "x1");  // original names shifted up

    const RingPtr smaller = contract_without_var(ring, 2);
    CHECK(smaller->nvars() == 2);
    CHECK(smaller->var_name(1) == "x2");
}

TEST_CASE("monomial arithmetic") {
    const Monomial a({2, 1, 0});
    const Monomial b({1, 0, 3});
    CHECK(a.degree() == 3);
    CHECK((a * b).exponents() == std::vector<int>{3, 1, 3});
    CHECK(lcm(a, b).exponents() == std::vector<int>{2, 1, 3});
    CHECK(Monomial({1, 0, 0}).divides(a));
    CHECK_FALSE(b.divides(a));
    CHECK((a / Monomial({1, 1, 0})).exponents() == std::vector<int>{1, 0, 0});
    CHECK(Monomial({0, 1, 0}).is_coprime_with(Monomial({1, 0, 1})));
    CHECK_FALSE(a.is_coprime_with(b));
    CHECK(Monomial::one(3).is_one());
    CHECK(Monomial::var(3, 1, 4).exponents() == std::vector<int>{0, 4, 0});
}

TEST_CASE("degrevlex order on degree-2 monomials in 3 variables") {
    // Hand-ordered descending: x1^2 > x1x2 > x2^2 > x1x3 > x2x3 > x3^2.
    const MonomialOrder ord = MonomialOrder::degrevlex();
    const std::vector<Monomial> expected{
        Monomial({2, 0, 0}), Monomial({1, 1, 0}), Monomial({0, 2, 0}),
        Monomial({1, 0, 1}), Monomial({0, 1, 1}), Monomial({0, 0, 2})};
    for (std::size_t i = 0; i + 1 < expected.size(); ++i)
        CHECK(ord.greater(expected[i], expected[i + 1]));
    // Degree dominates.
    CHECK(ord.less(Monomial({1, 1, 0}), Monomial({0, 0, 3})));
}

TEST_CASE("lex order") {
    const MonomialOrder ord = MonomialOrder::lex();
    CHECK(ord.greater(Monomial({1, 0, 0}), Monomial({0, 5, 0})));  // x1 > x2^5
    CHECK(ord.greater(Monomial({2, 0, 0}), Monomial({1, 1, 0})));
    CHECK(ord.less(Monomial({0, 1, 1}), Monomial({0, 2, 0})));
}

TEST_CASE("elimination block order prefers tag-free monomials") {
    // Block of size 1: any power of x1 beats anything without x1.
    const MonomialOrder ord = MonomialOrder::elimination_block(1);
    CHECK(ord.greater(Monomial({1, 0, 0}), Monomial({0, 7, 3})));
    CHECK(ord.less(Monomial({0, 4, 0}), Monomial({1, 0, 0})));
    // Within the tag-free tail, degrevlex.
    CHECK(ord.greater(Monomial({0, 2, 0}), Monomial({0, 1, 1})));
}

TEST_CASE("monomial enumeration is graded lex, largest first") {
    const std::vector<Monomial> deg2 = monomials_of_degree(3, 2);
    REQUIRE(deg2.size() == 6);
    CHECK(deg2.front().exponents() == std::vector<int>{2, 0, 0});
    CHECK(deg2[1].exponents() == std::vector<int>{1, 1, 0});
    CHECK(deg2[2].exponents() == std::vector<int>{1, 0, 1});
    CHECK(deg2.back().exponents() == std::vector<int>{0, 0, 2});
    CHECK(num_monomials(3, 2) == 6);
    CHECK(num_monomials(2, 5) == 6);
    CHECK(num_monomials(4, 3) == 20);
    // enum order: degree first, then lex descending within a degree.
    CHECK(enum_order_less(Monomial({0, 0, 2}), Monomial({3, 0, 0})));
    CHECK(enum_order_less(Monomial({2, 0, 0}), Monomial({1, 1, 0})));
    CHECK_FALSE(enum_order_less(Monomial({1, 1, 0}), Monomial({2, 0, 0})));
}

TEST_CASE("polynomial arithmetic") {
    const RingPtr ring = RingContext::make_default(2, kP);
    const Polynomial x1 = Polynomial::variable(ring, 0);
    const Polynomial x2 = Polynomial::variable(ring, 1);
    const Polynomial s = x1 + x2;
    CHECK((s * s).to_string() == "x1^2 + 2*x1*x2 + x2^2");
    CHECK((s * s - s * s).is_zero());
    CHECK(s.pow(3).to_string() == "x1^3 + 3*x1^2*x2 + 3*x1*x2^2 + x2^3");
    CHECK((x1 - x1).is_zero());
    const Polynomial f = pp("x1^2 - x2^2", ring);
    CHECK((f.exact_divide_by(pp("x1 - x2", ring))).to_string() == "x1 + x2");
    CHECK(f.is_homogeneous());
    CHECK(f.homogeneous_degree() == 2);
    CHECK_FALSE(pp("x1^2 + x2", ring).is_homogeneous());
    CHECK(pp("3*x1^2", ring).monic().to_string() == "x1^2");
    CHECK(f.leading_monomial().exponents() == std::vector<int>{2, 0});
    CHECK(f.degree() == 2);
    CHECK(Polynomial::constant(ring, 5).is_constant());
}

TEST_CASE("scalar and monomial products") {
    const RingPtr ring = RingContext::make_default(2, kP);
    const Polynomial f = pp("x1 + 2*x2", ring);
    CHECK(f.scaled(3).to_string() == "3*x1 + 6*x2");
    CHECK(f.times_monomial(Monomial({1, 1})).to_string() == "x1^2*x2 + 2*x1*x2^2");
}

TEST_CASE("substitute_variable") {
    const RingPtr ring = RingContext::make_default(3, kP);
    const Polynomial f = pp("x1^2 + x2*x3", ring);
    // x3 := x1 - x2
    const Polynomial g = substitute_variable(f, 2, pp("x1 - x2", ring));
    CHECK(g == pp("x1^2 + x2*(x1 - x2)", ring));
    // Substituting an absent variable is the identity.
    CHECK(substitute_variable(f, 2, Polynomial::constant(ring, 0)) ==
          pp("x1^2", ring));
}

TEST_CASE("parser handles the documented grammar") {
    const RingPtr ring = RingContext::make_default(3, kP);
    CHECK(pp("x1^2*x2 + 3*x3", ring).to_string() == "x1^2*x2 + 3*x3");
    CHECK(pp("  x1  -  x2 ", ring).to_string() == "x1 + 32002*x2");
    CHECK(pp("-x1", ring).to_string() == "32002*x1");
    CHECK(pp("(x1 + x2)*(x1 - x2)", ring).to_string() == "x1^2 + 32002*x2^2");
    CHECK(pp("2*(x1 + 4)", ring).to_string() == "2*x1 + 8");
    CHECK(pp("x1^0", ring).to_string() == "1");
    CHECK(pp("0", ring).is_zero());
    CHECK(pp("32003", ring).is_zero());  // coefficient wraps to zero
    CHECK(pp("-3", ring).to_string() == "32000");
}

TEST_CASE("parser reports offsets for malformed input") {
    const RingPtr ring = RingContext::make_default(3, kP);
    CHECK_THROWS_AS(pp("x1*(x2", ring), ParseError);
    try {
        pp("x1*(x2", ring);
    } catch (const ParseError& e) {
        CHECK(e.offset() == 6);  // the missing ')' would sit at the end
    }
    CHECK_THROWS_AS(pp("x4", ring), ParseError);       // unknown variable
    CHECK_THROWS_AS(pp("x1 + + x2", ring), ParseError);
    CHECK_THROWS_AS(pp("", ring), ParseError);
    CHECK_THROWS_AS(pp("x1^", ring), ParseError);
}

TEST_CASE("parse/print round trip on random polynomials") {
    const RingPtr ring = RingContext::make_default(3, kP);
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Term> terms;
        for (int d = 0; d <= 3; ++d)
            for (const Monomial& m : monomials_of_degree(3, d)) {
                const std::uint32_t c = std::uint32_t(rng() % kP);
                if (c && rng() % 3 == 0) terms.push_back(Term{m, c});
            }
        const Polynomial f = Polynomial::from_terms(ring, terms);
        CHECK(parse_polynomial(f.to_string(), ring) == f);
    }
}

TEST_CASE("Hilbert function container") {
    const HilbertFunction h = HilbertFunction::artinian({1, 2, 1, 0, 0});
    CHECK(h.to_string() == "1,2,1");  // trailing zeros trimmed
    CHECK(h.at(1) == 2);
    CHECK(h.at(10) == 0);  // zero-extension
    CHECK(h.total() == 4);
    CHECK(h.top_socle_degree() == 2);
    CHECK(h.is_symmetric());
    CHECK_FALSE(HilbertFunction::artinian({1, 2}).is_symmetric());
    CHECK(HilbertFunction::artinian({}).to_string() == "0");
    CHECK(HilbertFunction::artinian({}).is_symmetric());
    CHECK(HilbertFunction::artinian({}).top_socle_degree() == -1);

    const HilbertFunction t = HilbertFunction::truncated({1, 3, 6});
    CHECK_FALSE(t.artinian());
    CHECK(t.at(2) == 6);
    CHECK_THROWS_AS(t.at(3), Error);  // beyond the truncation bound
    CHECK(h == HilbertFunction::artinian({1, 2, 1}));
    CHECK_FALSE(h == t);
}
