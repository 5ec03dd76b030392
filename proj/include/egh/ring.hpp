#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace egh {

class RingContext;
using RingPtr = std::shared_ptr<const RingContext>;

// The ambient polynomial ring k[x_1, ..., x_n] with k = F_p. Immutable;
// shared by pointer so that values carry their ring cheaply.
class RingContext {
public:
    static RingPtr make(int nvars, std::uint32_t characteristic,
                        std::vector<std::string> var_names);

    // Convenience: variables named x1..xn.
    static RingPtr make_default(int nvars, std::uint32_t characteristic);

    int nvars() const { return nvars_; }
    std::uint32_t characteristic() const { return p_; }
    const std::vector<std::string>& var_names() const { return names_; }
    const std::string& var_name(int i) const { return names_[std::size_t(i)]; }

    // Index of a variable name, or -1.
    int var_index(const std::string& name) const;

    bool same_as(const RingContext& other) const;

private:
    RingContext(int nvars, std::uint32_t p, std::vector<std::string> names)
        : nvars_(nvars), p_(p), names_(std::move(names)) {}

    int nvars_;
    std::uint32_t p_;
    std::vector<std::string> names_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

// Ring with one fresh elimination variable prepended at index 0. The tag
// name is chosen to avoid every existing variable name.
RingPtr extend_with_tag(const RingPtr& ring);

// Ring with variable `drop` removed, other names kept in order.
RingPtr contract_without_var(const RingPtr& ring, int drop);

}  // namespace egh
