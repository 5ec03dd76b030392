#include "egh/graded.hpp"

#include "egh/errors.hpp"

namespace egh {

std::size_t monomial_rank(const Monomial& m) {
    int n = m.nvars();
    int rem = m.degree();
    std::size_t rank = 0;
    // count monomials that precede m: at the first differing slot they carry
    // a larger exponent, and the tail is free
    for (int j = 0; j + 1 < n; ++j) {
        int e = m.exponent(j);
        for (int v = rem; v > e; --v) rank += std::size_t(num_monomials(n - 1 - j, rem - v));
        rem -= e;
    }
    return rank;
}

std::vector<std::uint32_t> homogeneous_row(int nvars, const Polynomial& f, int degree) {
    std::vector<std::uint32_t> row(std::size_t(num_monomials(nvars, degree)), 0);
    for (const auto& t : f.terms()) {
        if (t.mono.degree() != degree)
            throw Error("row of a polynomial that is not homogeneous of degree " +
                        std::to_string(degree));
        row[monomial_rank(t.mono)] = t.coeff;
    }
    return row;
}

Polynomial row_to_polynomial(const RingPtr& ring, const std::vector<std::uint32_t>& row,
                             int degree) {
    auto monos = monomials_of_degree(ring->nvars(), degree);
    if (monos.size() != row.size()) throw Error("row length does not match the degree");
    std::vector<Term> terms;
    for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0) terms.push_back(Term{monos[i], row[i]});
    return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace egh
