#include "egh/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "egh/errors.hpp"
#include "egh/fp.hpp"

namespace egh {

namespace {

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

}  // namespace

RingPtr RingContext::make(int nvars, std::uint32_t characteristic,
                          std::vector<std::string> var_names) {
    if (nvars < 1) throw Error("ring needs at least one variable");
    if (characteristic > kMaxPrime || !is_prime(characteristic))
        throw Error("characteristic must be a prime < 2^31, got " +
                    std::to_string(characteristic));
    if (int(var_names.size()) != nvars)
        throw Error("expected " + std::to_string(nvars) + " variable names, got " +
                    std::to_string(var_names.size()));
    std::set<std::string> seen;
    for (const auto& name : var_names) {
        if (!valid_identifier(name))
            throw Error("invalid variable name '" + name + "'");
        if (!seen.insert(name).second)
            throw Error("duplicate variable name '" + name + "'");
    }
    return RingPtr(new RingContext(nvars, characteristic, std::move(var_names)));
}

RingPtr RingContext::make_default(int nvars, std::uint32_t characteristic) {
    std::vector<std::string> names;
    names.reserve(std::size_t(nvars));
    for (int i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
    return make(nvars, characteristic, std::move(names));
}

int RingContext::var_index(const std::string& name) const {
    for (int i = 0; i < nvars_; ++i)
        if (names_[std::size_t(i)] == name) return i;
    return -1;
}

bool RingContext::same_as(const RingContext& other) const {
    return nvars_ == other.nvars_ && p_ == other.p_ && names_ == other.names_;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same_as(*b);
}

RingPtr extend_with_tag(const RingPtr& ring) {
    std::string tag = "t";
    for (int k = 0; ring->var_index(tag) >= 0; ++k) tag = "t" + std::to_string(k);
    std::vector<std::string> names;
    names.reserve(std::size_t(ring->nvars()) + 1);
    names.push_back(tag);
    for (const auto& n : ring->var_names()) names.push_back(n);
    return RingContext::make(ring->nvars() + 1, ring->characteristic(), std::move(names));
}

RingPtr contract_without_var(const RingPtr& ring, int drop) {
    if (drop < 0 || drop >= ring->nvars())
        throw Error("variable index out of range");
    if (ring->nvars() == 1)
        throw Error("cannot contract a one-variable ring");
    std::vector<std::string> names;
    for (int i = 0; i < ring->nvars(); ++i)
        if (i != drop) names.push_back(ring->var_name(i));
    return RingContext::make(ring->nvars() - 1, ring->characteristic(), std::move(names));
}

}  // namespace egh
