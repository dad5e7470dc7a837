#pragma once

#include <stdexcept>
#include <string>

namespace asp {

/// Raised when an argument violates a documented precondition.
class InvalidArgument : public std::invalid_argument {
public:
    explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a computation cannot produce a trustworthy number
/// (precision loss, a logarithm outside its domain, a runaway loop).
class NumericFailure : public std::runtime_error {
public:
    explicit NumericFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace asp
