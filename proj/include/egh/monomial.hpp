#pragma once

#include <vector>

namespace egh {

// Exponent vector with cached total degree. The atom of all combinatorics.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);

    static Monomial one(int nvars);
    static Monomial var(int nvars, int index, int power = 1);

    int nvars() const { return int(e_.size()); }
    int degree() const { return deg_; }
    int exponent(int i) const { return e_[std::size_t(i)]; }
    const std::vector<int>& exponents() const { return e_; }

    bool is_one() const { return deg_ == 0; }
    bool divides(const Monomial& other) const;
    bool is_coprime_with(const Monomial& other) const;

    Monomial operator*(const Monomial& other) const;
    // Componentwise quotient; requires other | *this.
    Monomial operator/(const Monomial& other) const;

    friend Monomial lcm(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& other) const { return e_ == other.e_; }
    bool operator!=(const Monomial& other) const { return e_ != other.e_; }

private:
    std::vector<int> e_;
    int deg_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);

// Total orders on monomials of a fixed ring.
//
//   degrevlex — graded reverse lexicographic, the working order of the
//               Groebner engine;
//   lex       — pure lexicographic with x1 > x2 > ..., used for lex-segment
//               constructions;
//   grlex     — graded lexicographic, the fixed enumeration/tie-break order;
//   block(k)  — eliminates the first k variables: compares the leading block
//               by degrevlex, then the tail by degrevlex.
class MonomialOrder {
public:
    static MonomialOrder degrevlex() { return MonomialOrder(Kind::Degrevlex, 0); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
    static MonomialOrder grlex() { return MonomialOrder(Kind::Grlex, 0); }
    static MonomialOrder elimination_block(int lead_vars) {
        return MonomialOrder(Kind::Block, lead_vars);
    }

    // <0 if a < b, 0 if equal, >0 if a > b.
    int compare(const Monomial& a, const Monomial& b) const;

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

private:
    enum class Kind { Degrevlex, Lex, Grlex, Block };

    MonomialOrder(Kind k, int block) : kind_(k), block_(block) {}

    Kind kind_;
    int block_;
};

// All monomials of the given total degree, largest first in lex. Together
// with increasing degree this is the fixed graded-lex enumeration order used
// everywhere monomials are listed.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

// Number of monomials of the given degree: C(nvars-1+degree, degree).
long long num_monomials(int nvars, int degree);

// The fixed (degree, then lex-descending) enumeration order as a comparator.
bool enum_order_less(const Monomial& a, const Monomial& b);

}  // namespace egh
