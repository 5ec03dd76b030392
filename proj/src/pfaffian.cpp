#include "egh/pfaffian.hpp"

#include "egh/errors.hpp"

namespace egh {

namespace {

// Pfaffian of a full alternating matrix given by rows, expanding along the
// first row: Pf(A) = Σ_j (-1)^j a_{1j} Pf(A with rows/cols 1, j removed),
// 1-based signs.
Polynomial pf_rows(const RingPtr& ring, const std::vector<std::vector<Polynomial>>& a) {
    const std::size_t m = a.size();
    if (m == 0) return Polynomial::constant(ring, 1);
    Polynomial acc(ring);
    for (std::size_t j = 1; j < m; ++j) {
        if (a[0][j].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        minor.reserve(m - 2);
        for (std::size_t r = 1; r < m; ++r) {
            if (r == j) continue;
            std::vector<Polynomial> row;
            row.reserve(m - 2);
            for (std::size_t c = 1; c < m; ++c)
                if (c != j) row.push_back(a[r][c]);
            minor.push_back(std::move(row));
        }
        Polynomial term = a[0][j] * pf_rows(ring, minor);
        // (-1)^(j+1) with 1-based column index j+1
        acc = (j % 2 == 1) ? acc + term : acc - term;
    }
    return acc;
}

std::vector<std::vector<Polynomial>> full_rows(const AlternatingMatrix& M) {
    const int m = M.size();
    std::vector<std::vector<Polynomial>> rows{std::size_t(m)};
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) rows[std::size_t(i)].push_back(M.entry(i, j));
    return rows;
}

}  // namespace

AlternatingMatrix AlternatingMatrix::from_upper(RingPtr ring, int m,
                                                std::vector<Polynomial> upper) {
    if (m < 2) throw Error("alternating matrix needs size at least 2");
    if (int(upper.size()) != m * (m - 1) / 2)
        throw Error("expected " + std::to_string(m * (m - 1) / 2) + " upper entries, got " +
                    std::to_string(upper.size()));
    for (const auto& f : upper)
        if (!f.is_zero() && !same_ring(f.ring(), ring))
            throw Error("matrix entry from a different ring");
    return AlternatingMatrix(std::move(ring), m, std::move(upper));
}

AlternatingMatrix AlternatingMatrix::from_entries(
    RingPtr ring, const std::vector<std::vector<Polynomial>>& entries) {
    const int m = int(entries.size());
    if (m < 2) throw Error("alternating matrix needs size at least 2");
    for (const auto& row : entries)
        if (int(row.size()) != m) throw Error("matrix is not square");
    std::vector<Polynomial> upper;
    for (int i = 0; i < m; ++i) {
        if (!entries[std::size_t(i)][std::size_t(i)].is_zero())
            throw Error("matrix is not alternating: nonzero diagonal");
        for (int j = i + 1; j < m; ++j) {
            if (!(entries[std::size_t(j)][std::size_t(i)] ==
                  -entries[std::size_t(i)][std::size_t(j)]))
                throw Error("matrix is not alternating at (" + std::to_string(j + 1) + "," +
                            std::to_string(i + 1) + ")");
            upper.push_back(entries[std::size_t(i)][std::size_t(j)]);
        }
    }
    return from_upper(std::move(ring), m, std::move(upper));
}

Polynomial AlternatingMatrix::entry(int i, int j) const {
    if (i < 0 || j < 0 || i >= m_ || j >= m_) throw Error("matrix index out of range");
    if (i == j) return Polynomial(ring_);
    if (i > j) return -entry(j, i);
    // row-major strict upper triangle
    const int offset = i * (2 * m_ - i - 1) / 2 + (j - i - 1);
    return upper_[std::size_t(offset)];
}

Polynomial pfaffian(const AlternatingMatrix& M) {
    if (M.size() % 2 != 0) throw Error("Pfaffian of an odd-size matrix is zero by convention; ask for submaximal Pfaffians instead");
    return pf_rows(M.ring(), full_rows(M));
}

Ideal pfaffian_ideal(const AlternatingMatrix& M) {
    const int m = M.size();
    if (m % 2 == 0 || m < 3) throw Error("submaximal Pfaffians need odd size at least 3");
    auto rows = full_rows(M);
    std::vector<Polynomial> gens;
    for (int k = 0; k < m; ++k) {
        std::vector<std::vector<Polynomial>> minor;
        for (int r = 0; r < m; ++r) {
            if (r == k) continue;
            std::vector<Polynomial> row;
            for (int c = 0; c < m; ++c)
                if (c != k) row.push_back(rows[std::size_t(r)][std::size_t(c)]);
            minor.push_back(std::move(row));
        }
        Polynomial pf = pf_rows(M.ring(), minor);
        if (!pf.is_zero() && !pf.is_homogeneous())
            throw Error("submaximal Pfaffian " + std::to_string(k + 1) + " is not homogeneous");
        gens.push_back(std::move(pf));
    }
    return Ideal::from_generators(M.ring(), std::move(gens));
}

AlternatingMatrix random_linear_alternating(const RingPtr& ring, int m, std::mt19937_64& rng) {
    const std::uint32_t p = ring->characteristic();
    std::vector<Polynomial> upper;
    upper.reserve(std::size_t(m * (m - 1) / 2));
    for (int k = 0; k < m * (m - 1) / 2; ++k) {
        Polynomial f(ring);
        for (int v = 0; v < ring->nvars(); ++v)
            f = f + Polynomial::variable(ring, v).scaled(std::uint32_t(rng() % p));
        upper.push_back(std::move(f));
    }
    return AlternatingMatrix::from_upper(ring, m, std::move(upper));
}

}  // namespace egh
