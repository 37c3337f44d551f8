#pragma once

#include <stdexcept>
#include <string>

namespace tutteconv {

// Evaluation requested outside the exact domain (fractional power of a
// non-square rational, zero base with negative exponent, ...).
struct EvalError : std::domain_error {
    explicit EvalError(const std::string& msg) : std::domain_error(msg) {}
};

// A Laurent expression that cannot be expanded into the requested
// polynomial form (negative or half-integer exponent in the way).
struct NonpolynomialError : std::domain_error {
    explicit NonpolynomialError(const std::string& msg) : std::domain_error(msg) {}
};

// A stated precondition of an operation does not hold (e.g. axiom checks
// that presume a matroid rank function).
struct PreconditionError : std::logic_error {
    explicit PreconditionError(const std::string& msg) : std::logic_error(msg) {}
};

// Enumeration or storage would exceed the configured desk-scale caps.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace tutteconv
