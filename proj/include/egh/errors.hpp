#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace egh {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed polynomial or ideal-file input. Carries the byte offset of the
// first offending character.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " at offset " + std::to_string(offset)), offset_(offset) {}

    // File-level failure (bad header, wrapped line error) where a byte
    // offset would be meaningless.
    explicit ParseError(const std::string& msg) : Error(msg), offset_(0) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// A computation exceeded the configured degree or basis-size guard.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

// An exact identity that the algorithm promises to check did not hold
// (double-colon link check, Hilbert function mismatch, negative liaison
// entry, ...). The message carries the offending data.
class VerificationError : public Error {
public:
    using Error::Error;
};

// A randomized choice failed to be generic after the configured retries.
// Over a small prime field this is expected occasionally; it is reported,
// never silently retried forever.
class GenericityError : public Error {
public:
    using Error::Error;
};

// A lex-plus-powers target Hilbert function that no monomial ideal
// containing the prescribed powers can realize.
class TargetNotAchievable : public Error {
public:
    using Error::Error;
};

}  // namespace egh
