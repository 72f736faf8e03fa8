#pragma once

#include <stdexcept>
#include <string>

namespace permcodes {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotAPrimePower : public Error {
public:
    explicit NotAPrimePower(long long q)
        : Error(std::to_string(q) + " is not a prime power") {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("inverse of zero in a finite field") {}
};

class SpecMismatch : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

class ParameterError : public Error {
public:
    using Error::Error;
};

/// An enumeration or search would exceed its configured work budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class NotFullWeight : public Error {
public:
    using Error::Error;
};

class NotInDual : public Error {
public:
    using Error::Error;
};

/// A randomized or exhaustive search finished without a result.
class NotFound : public Error {
public:
    using Error::Error;
};

/// A computed object failed its own post-hoc check.
class VerificationFailed : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace permcodes
