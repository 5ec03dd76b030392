#include "egh/linalg.hpp"

#include <algorithm>

#include "egh/errors.hpp"
#include "egh/fp.hpp"

namespace egh {

std::size_t FpRowSpace::reduce(std::vector<std::uint32_t>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::uint32_t c = v[pivots_[r]];
        if (c == 0) continue;
        // rows are normalized with pivot 1
        const auto& row = rows_[r];
        for (std::size_t j = pivots_[r]; j < ncols_; ++j)
            v[j] = fp_sub(v[j], fp_mul(c, row[j], p_), p_);
    }
    for (std::size_t j = 0; j < ncols_; ++j)
        if (v[j] != 0) return j;
    return ncols_;
}

bool FpRowSpace::insert(std::vector<std::uint32_t> v) {
    if (v.size() != ncols_) throw Error("row length mismatch");
    std::size_t piv = reduce(v);
    if (piv == ncols_) return false;
    std::uint32_t inv = fp_inv(v[piv], p_);
    for (std::size_t j = piv; j < ncols_; ++j) v[j] = fp_mul(v[j], inv, p_);
    // back-substitute to keep the rows fully reduced, so that reduce() is a
    // single forward pass
    for (auto& row : rows_) {
        std::uint32_t c = row[piv];
        if (c == 0) continue;
        for (std::size_t j = piv; j < ncols_; ++j)
            row[j] = fp_sub(row[j], fp_mul(c, v[j], p_), p_);
    }
    std::size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < piv) ++at;
    rows_.insert(rows_.begin() + long(at), std::move(v));
    pivots_.insert(pivots_.begin() + long(at), piv);
    return true;
}

bool FpRowSpace::contains(std::vector<std::uint32_t> v) const {
    if (v.size() != ncols_) throw Error("row length mismatch");
    return reduce(v) == ncols_;
}

}  // namespace egh
