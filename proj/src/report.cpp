// Report rendering: key=value records or a padded two-column table.

#include "egh/report.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace egh {

void Report::add(const std::string& key, const std::string& value) {
    items_.emplace_back(key, value);
}

void Report::add(const std::string& key, const char* value) {
    items_.emplace_back(key, std::string(value));
}

void Report::add(const std::string& key, long long value) {
    items_.emplace_back(key, std::to_string(value));
}

void Report::add(const std::string& key, std::uint64_t value) {
    items_.emplace_back(key, std::to_string(value));
}

void Report::add(const std::string& key, bool value) {
    items_.emplace_back(key, value ? "yes" : "no");
}

std::string Report::value(const std::string& key) const {
    for (const auto& [k, v] : items_)
        if (k == key) return v;
    return {};
}

void Report::print(std::ostream& out, OutputFormat format) const {
    if (format == OutputFormat::Records) {
        for (const auto& [key, value] : items_) out << key << "=" << value << "\n";
        return;
    }
    std::size_t width = 0;
    for (const auto& [key, value] : items_) width = std::max(width, key.size());
    for (const auto& [key, value] : items_) {
        out << key;
        for (std::size_t i = key.size(); i < width + 2; ++i) out << ' ';
        out << value << "\n";
    }
}

std::string Report::to_string(OutputFormat format) const {
    std::ostringstream out;
    print(out, format);
    return out.str();
}

std::string join(const std::vector<std::string>& pieces, const std::string& sep) {
    std::string result;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i) result += sep;
        result += pieces[i];
    }
    return result;
}

}  // namespace egh
