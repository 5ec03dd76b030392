#pragma once

#include <string>
#include <vector>

namespace egh {

// Hilbert function of a graded quotient S/I: d -> dim_k (S/I)_d.
//
// Artinian functions store full finite support with trailing zeros trimmed,
// so the last stored value sits at the top socle degree. Non-Artinian
// functions are explicit truncations through a caller-supplied degree bound.
class HilbertFunction {
public:
    HilbertFunction() = default;

    static HilbertFunction artinian(std::vector<long long> values);
    static HilbertFunction truncated(std::vector<long long> values);

    bool artinian() const { return artinian_; }
    // -1 for the identically zero function (unit ideal).
    int top_socle_degree() const;
    const std::vector<long long>& values() const { return values_; }
    int length() const { return int(values_.size()); }

    // Value at degree d; zero-extended beyond the support for Artinian
    // functions, out of range for truncated ones.
    long long at(int d) const;

    // Total k-dimension; Artinian only.
    long long total() const;

    bool is_zero() const { return values_.empty(); }

    // Symmetric about the socle degree (CI/Gorenstein shape).
    bool is_symmetric() const;

    // Zero-padded comparison, so (1,2) == (1,2,0).
    bool operator==(const HilbertFunction& other) const;
    bool operator!=(const HilbertFunction& other) const { return !(*this == other); }

    // Comma-separated values, "0" when identically zero.
    std::string to_string() const;

private:
    std::vector<long long> values_;
    bool artinian_ = true;
};

}  // namespace egh
