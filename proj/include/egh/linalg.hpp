#pragma once

#include <cstdint>
#include <vector>

namespace egh {

// Incremental row-echelon form over F_p, used for degree-by-degree linear
// algebra: graded bases of ideals, membership of a form in a graded piece,
// and minimal-generator selection.
class FpRowSpace {
public:
    FpRowSpace(std::size_t ncols, std::uint32_t p) : ncols_(ncols), p_(p) {}

    // Reduces v against the current rows; if a nonzero remainder is left it
    // is normalized, inserted, and true is returned.
    bool insert(std::vector<std::uint32_t> v);

    // True iff v lies in the row span.
    bool contains(std::vector<std::uint32_t> v) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t ncols() const { return ncols_; }
    const std::vector<std::vector<std::uint32_t>>& rows() const { return rows_; }

private:
    // Reduces v in place; returns pivot column or ncols_ if v became zero.
    std::size_t reduce(std::vector<std::uint32_t>& v) const;

    std::size_t ncols_;
    std::uint32_t p_;
    std::vector<std::vector<std::uint32_t>> rows_;  // echelon, pivots ascending
    std::vector<std::size_t> pivots_;
};

}  // namespace egh
