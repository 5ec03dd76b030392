#pragma once

#include <random>
#include <vector>

#include "egh/ideal.hpp"
#include "egh/polynomial.hpp"

namespace egh {

// Alternating matrix of forms: zero diagonal, entry(j,i) = -entry(i,j).
// Stored as the strict upper triangle in row-major order.
class AlternatingMatrix {
public:
    // upper = (a_01, a_02, ..., a_0,m-1, a_12, ...), m(m-1)/2 entries.
    static AlternatingMatrix from_upper(RingPtr ring, int m, std::vector<Polynomial> upper);

    // Full matrix, validated to be alternating.
    static AlternatingMatrix from_entries(RingPtr ring,
                                          const std::vector<std::vector<Polynomial>>& entries);

    const RingPtr& ring() const { return ring_; }
    int size() const { return m_; }
    Polynomial entry(int i, int j) const;

private:
    AlternatingMatrix(RingPtr ring, int m, std::vector<Polynomial> upper)
        : ring_(std::move(ring)), m_(m), upper_(std::move(upper)) {}

    RingPtr ring_;
    int m_ = 0;
    std::vector<Polynomial> upper_;
};

// Pfaffian by recursive expansion along the first row; size must be even
// (the empty matrix has Pfaffian 1).
Polynomial pfaffian(const AlternatingMatrix& M);

// Ideal of the m submaximal Pfaffians (row/column i deleted) of an odd-size
// alternating matrix, m ≥ 3. Each Pfaffian must come out homogeneous.
Ideal pfaffian_ideal(const AlternatingMatrix& M);

// Alternating matrix with uniformly random linear upper entries.
AlternatingMatrix random_linear_alternating(const RingPtr& ring, int m, std::mt19937_64& rng);

}  // namespace egh
