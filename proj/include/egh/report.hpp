#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace egh {

enum class OutputFormat { Table, Records };

// An ordered list of key/value pairs.  Records mode prints `key=value`
// lines with a stable key set so tests can diff output byte for byte;
// table mode pads the keys for human eyes.  Same data either way.
class Report {
public:
    void add(const std::string& key, const std::string& value);
    // Keeps string literals away from the bool overload.
    void add(const std::string& key, const char* value);
    void add(const std::string& key, long long value);
    void add(const std::string& key, std::uint64_t value);
    void add(const std::string& key, bool value);  // yes / no

    const std::vector<std::pair<std::string, std::string>>& items() const {
        return items_;
    }
    // Value for a key, or empty string (used by tests).
    std::string value(const std::string& key) const;

    void print(std::ostream& out, OutputFormat format) const;
    std::string to_string(OutputFormat format) const;

private:
    std::vector<std::pair<std::string, std::string>> items_;
};

// Joins pieces with a separator; convenience for report values.
std::string join(const std::vector<std::string>& pieces, const std::string& sep);

}  // namespace egh
