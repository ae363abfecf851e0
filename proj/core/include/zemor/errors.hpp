#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zemor {

/// Base class for every error raised by the attack library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Precondition violated by a caller-supplied value.
class BadInput : public Error {
public:
    using Error::Error;
};

class ModulusMismatch : public Error {
public:
    ModulusMismatch() : Error("operands use different moduli") {}
};

class NotCoprime : public Error {
public:
    using Error::Error;
};

class NonResidue : public Error {
public:
    using Error::Error;
};

/// The Euclidean peeling reached a matrix it cannot reduce further.
class NotReducible : public Error {
public:
    using Error::Error;
};

/// A Euclidean quotient does not fit a 64-bit run exponent.
class ExponentOverflow : public NotReducible {
public:
    using NotReducible::NotReducible;
};

/// A randomized search used up its attempt budget.
class RetryExhausted : public Error {
public:
    using Error::Error;
};

/// Pollard rho hit its iteration cap before splitting a composite.
class FactorBudgetExceeded : public Error {
public:
    using Error::Error;
};

class Timeout : public Error {
public:
    Timeout() : Error("wall-clock budget exceeded") {}
};

/// Malformed word text; offset is the byte position of the problem.
class WordParseError : public Error {
public:
    WordParseError(std::size_t offset, const std::string& what)
        : Error("word parse error at byte " + std::to_string(offset) + ": " + what), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace zemor
