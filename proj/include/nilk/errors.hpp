#pragma once

#include <stdexcept>
#include <string>

namespace nilk {

/// Operands live in different rings (different coefficient type or variable list).
class RingMismatch : public std::invalid_argument {
public:
    explicit RingMismatch(const std::string &what) : std::invalid_argument("ring mismatch: " + what) {}
};

class DimensionMismatch : public std::invalid_argument {
public:
    explicit DimensionMismatch(const std::string &what)
        : std::invalid_argument("dimension mismatch: " + what) {}
};

/// Raised where an inverse is required and the element is not a recognized unit.
/// Functions that merely ask (try_invert) return std::nullopt instead.
class NotAUnit : public std::domain_error {
public:
    explicit NotAUnit(const std::string &what) : std::domain_error("not a unit: " + what) {}
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string &what) : std::runtime_error("parse error: " + what) {}
};

/// An identity that a construction asserts did not hold.
class VerificationFailure : public std::logic_error {
public:
    explicit VerificationFailure(const std::string &what)
        : std::logic_error("verification failed: " + what) {}
};

} // namespace nilk
