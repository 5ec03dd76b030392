#include "egh/hilbert.hpp"

#include <algorithm>
#include <sstream>

#include "egh/errors.hpp"

namespace egh {

HilbertFunction HilbertFunction::artinian(std::vector<long long> values) {
    for (long long v : values)
        if (v < 0) throw Error("negative Hilbert function value");
    while (!values.empty() && values.back() == 0) values.pop_back();
    HilbertFunction h;
    h.values_ = std::move(values);
    h.artinian_ = true;
    return h;
}

HilbertFunction HilbertFunction::truncated(std::vector<long long> values) {
    for (long long v : values)
        if (v < 0) throw Error("negative Hilbert function value");
    HilbertFunction h;
    h.values_ = std::move(values);
    h.artinian_ = false;
    return h;
}

int HilbertFunction::top_socle_degree() const {
    if (!artinian_) throw Error("socle degree of a non-Artinian Hilbert function");
    return int(values_.size()) - 1;
}

long long HilbertFunction::at(int d) const {
    if (d < 0) throw Error("negative degree");
    if (d < int(values_.size())) return values_[std::size_t(d)];
    if (artinian_) return 0;
    throw Error("degree beyond the computed bound of a truncated Hilbert function");
}

long long HilbertFunction::total() const {
    if (!artinian_) throw Error("total dimension of a non-Artinian Hilbert function");
    long long s = 0;
    for (long long v : values_) s += v;
    return s;
}

bool HilbertFunction::is_symmetric() const {
    if (!artinian_) return false;
    int s = top_socle_degree();
    for (int t = 0; t <= s; ++t)
        if (at(t) != at(s - t)) return false;
    return true;
}

bool HilbertFunction::operator==(const HilbertFunction& other) const {
    if (artinian_ != other.artinian_) return false;
    if (artinian_) return values_ == other.values_;  // both trimmed
    std::size_t n = std::max(values_.size(), other.values_.size());
    for (std::size_t d = 0; d < n; ++d) {
        long long a = d < values_.size() ? values_[d] : -1;
        long long b = d < other.values_.size() ? other.values_[d] : -1;
        if (a != b) return false;
    }
    return true;
}

std::string HilbertFunction::to_string() const {
    if (values_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) os << ",";
        os << values_[i];
    }
    return os.str();
}

}  // namespace egh
