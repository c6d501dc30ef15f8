#pragma once

#include <stdexcept>
#include <string>

namespace steklov {

// Input violates a documented precondition (bad profile, out-of-range parameter,
// odd/even diameter outside the supported case).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed textual input (tree shorthand, edge-list files).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An iterative numeric routine did not meet its stopping criterion.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace steklov
