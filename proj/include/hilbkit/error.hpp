#pragma once

#include <stdexcept>
#include <string>

namespace hilbkit {

/// Raised when an input violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an internal consistency check fails (a computed value
/// contradicts a contract that must hold for correct inputs).
class CheckFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hilbkit
