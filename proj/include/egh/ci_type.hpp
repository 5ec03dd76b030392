#pragma once

#include <string>
#include <vector>

namespace egh {

// Type of a complete intersection: a multiset of positive degrees
// (a_1, ..., a_r), stored in the canonical weakly increasing arrangement.
class CIType {
public:
    // Accepts the degrees in any order and sorts them.
    explicit CIType(std::vector<int> degrees);

    // "2,2,3"
    static CIType parse(const std::string& text);

    int size() const { return int(degrees_.size()); }
    int operator[](int i) const { return degrees_[std::size_t(i)]; }
    const std::vector<int>& degrees() const { return degrees_; }

    // |a| = a_1 + ... + a_r.
    long long total() const;

    bool componentwise_geq(const CIType& other) const;

    bool operator==(const CIType& other) const { return degrees_ == other.degrees_; }
    bool operator!=(const CIType& other) const { return !(*this == other); }

    std::string to_string() const;

private:
    std::vector<int> degrees_;
};

// Chain (a^(1), ..., a^(s+1)) of equal-length CI types, componentwise
// nonincreasing — the sequentially bounded condition. The last entry is the
// type of the terminal complete intersection.
class TypeChain {
public:
    explicit TypeChain(std::vector<CIType> types);

    // "3,3;2,2;1,1"
    static TypeChain parse(const std::string& text);

    // s + 1.
    int length() const { return int(types_.size()); }
    int s() const { return length() - 1; }

    // 0-based: type(0) = a^(1).
    const CIType& type(int i) const { return types_[std::size_t(i)]; }
    const std::vector<CIType>& types() const { return types_; }

    bool operator==(const TypeChain& other) const { return types_ == other.types_; }
    bool operator!=(const TypeChain& other) const { return !(*this == other); }

    std::string to_string() const;

private:
    std::vector<CIType> types_;
};

}  // namespace egh
