#include "egh/monomial.hpp"

#include <numeric>

#include "egh/errors.hpp"

namespace egh {

Monomial::Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
    deg_ = 0;
    for (int x : e_) {
        if (x < 0) throw Error("negative exponent");
        deg_ += x;
    }
}

Monomial Monomial::one(int nvars) { return Monomial(std::vector<int>(std::size_t(nvars), 0)); }

Monomial Monomial::var(int nvars, int index, int power) {
    std::vector<int> e(std::size_t(nvars), 0);
    e[std::size_t(index)] = power;
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
    if (deg_ > other.deg_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > other.e_[i]) return false;
    return true;
}

bool Monomial::is_coprime_with(const Monomial& other) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > 0 && other.e_[i] > 0) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += other.e_[i];
    r.deg_ += other.deg_;
    return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        r.e_[i] -= other.e_[i];
        if (r.e_[i] < 0) throw Error("monomial quotient is not exact");
    }
    r.deg_ -= other.deg_;
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i)
        if (b.e_[i] > r.e_[i]) r.e_[i] = b.e_[i];
    r.deg_ = std::accumulate(r.e_.begin(), r.e_.end(), 0);
    return r;
}

namespace {

// Reverse-lex tie-break on equal degrees: a > b iff the last nonzero entry
// of a - b is negative.
int revlex_tail(const std::vector<int>& a, const std::vector<int>& b,
                std::size_t lo, std::size_t hi) {
    for (std::size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

int lex_compare(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
}

int block_degree(const std::vector<int>& e, std::size_t lo, std::size_t hi) {
    int d = 0;
    for (std::size_t i = lo; i < hi; ++i) d += e[i];
    return d;
}

int degrevlex_block(const std::vector<int>& a, const std::vector<int>& b,
                    std::size_t lo, std::size_t hi) {
    int da = block_degree(a, lo, hi), db = block_degree(b, lo, hi);
    if (da != db) return da > db ? 1 : -1;
    return revlex_tail(a, b, lo, hi);
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    switch (kind_) {
        case Kind::Degrevlex:
            if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
            return revlex_tail(ea, eb, 0, ea.size());
        case Kind::Lex:
            return lex_compare(ea, eb);
        case Kind::Grlex:
            if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
            return lex_compare(ea, eb);
        case Kind::Block: {
            int c = degrevlex_block(ea, eb, 0, std::size_t(block_));
            if (c != 0) return c;
            return degrevlex_block(ea, eb, std::size_t(block_), ea.size());
        }
    }
    return 0;
}

namespace {

void enumerate_rec(int nvars, int var, int remaining, std::vector<int>& cur,
                   std::vector<Monomial>& out) {
    if (var == nvars - 1) {
        cur[std::size_t(var)] = remaining;
        out.emplace_back(cur);
        return;
    }
    // Largest exponent on the earliest variable first: lex descending.
    for (int e = remaining; e >= 0; --e) {
        cur[std::size_t(var)] = e;
        enumerate_rec(nvars, var + 1, remaining - e, cur, out);
    }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
    std::vector<Monomial> out;
    std::vector<int> cur(std::size_t(nvars), 0);
    enumerate_rec(nvars, 0, degree, cur, out);
    return out;
}

long long num_monomials(int nvars, int degree) {
    // C(nvars - 1 + degree, degree)
    long long r = 1;
    for (int i = 1; i <= nvars - 1; ++i) {
        r = r * (degree + i) / i;
    }
    return r;
}

bool enum_order_less(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return lex_compare(a.exponents(), b.exponents()) > 0;
}

}  // namespace egh
