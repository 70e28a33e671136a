#pragma once

#include <stdexcept>
#include <string>

namespace splitoff {

// Input violates an operation's contract (unknown vertex, wrong degree, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A guaranteed property failed to hold: the input was corrupted or there is a bug.
struct InvariantError : std::runtime_error {
    explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

// Instance exceeds a configured size fence of an exhaustive oracle.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file or string.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace splitoff
