#include "egh/ci_type.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "egh/errors.hpp"

namespace egh {

namespace {

// Comma-separated positive integers; offsets are relative to `base` within
// the surrounding text.
std::vector<int> parse_tuple(const std::string& text, std::size_t base) {
    std::vector<int> out;
    std::size_t pos = 0;
    for (;;) {
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected a positive integer", base + pos);
        long long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > 1'000'000) throw ParseError("degree out of range", base + pos);
            ++pos;
        }
        out.push_back(int(value));
        if (pos == text.size()) return out;
        if (text[pos] != ',') throw ParseError("expected ','", base + pos);
        ++pos;
    }
}

}  // namespace

CIType::CIType(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    if (degrees_.empty()) throw Error("a CI type needs at least one degree");
    for (int d : degrees_)
        if (d < 1) throw Error("CI type degrees must be positive");
    // a type is a multiset of degrees; store the canonical weakly
    // increasing arrangement
    std::sort(degrees_.begin(), degrees_.end());
}

CIType CIType::parse(const std::string& text) { return CIType(parse_tuple(text, 0)); }

long long CIType::total() const {
    return std::accumulate(degrees_.begin(), degrees_.end(), 0ll);
}

bool CIType::componentwise_geq(const CIType& other) const {
    if (size() != other.size()) throw Error("comparing CI types of different lengths");
    for (int i = 0; i < size(); ++i)
        if (degrees_[std::size_t(i)] < other[i]) return false;
    return true;
}

std::string CIType::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
        if (i) out << ',';
        out << degrees_[i];
    }
    return out.str();
}

TypeChain::TypeChain(std::vector<CIType> types) : types_(std::move(types)) {
    if (types_.empty()) throw Error("a type chain needs at least one type");
    for (std::size_t i = 1; i < types_.size(); ++i) {
        if (types_[i].size() != types_[0].size())
            throw Error("all types in a chain must have the same length");
        if (!types_[i - 1].componentwise_geq(types_[i]))
            throw Error("chain is not componentwise nonincreasing: " +
                        types_[i - 1].to_string() + " vs " + types_[i].to_string());
    }
}

TypeChain TypeChain::parse(const std::string& text) {
    std::vector<CIType> types;
    std::size_t start = 0;
    for (;;) {
        std::size_t semi = text.find(';', start);
        std::string piece =
            semi == std::string::npos ? text.substr(start) : text.substr(start, semi - start);
        types.push_back(CIType(parse_tuple(piece, start)));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    return TypeChain(std::move(types));
}

std::string TypeChain::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < types_.size(); ++i) {
        if (i) out << ';';
        out << types_[i].to_string();
    }
    return out.str();
}

}  // namespace egh
