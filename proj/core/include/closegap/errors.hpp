#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace closegap {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

class NotFundamental : public Error {
public:
    using Error::Error;
};

class NonConvergence : public Error {
public:
    using Error::Error;
};

class DiscriminantMismatch : public Error {
public:
    using Error::Error;
};

/// Zero counts could not be reconciled with Turing's bounds.
class CertificationFailure : public Error {
public:
    using Error::Error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

class TooFewZeros : public Error {
public:
    using Error::Error;
};

class MissingSuccessor : public Error {
public:
    using Error::Error;
};

class QuadratureUnstable : public Error {
public:
    using Error::Error;
};

/// Malformed line in a zero table. `line` is 1-based.
/// A file could not be opened, read or written.
class IoError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Ordinate not strictly greater than its predecessor.
class MonotonicityError : public Error {
public:
    MonotonicityError(std::size_t index, std::size_t line)
        : Error("ordinate " + std::to_string(index) + " (line " + std::to_string(line) +
                ") is not strictly increasing"),
          index_(index), line_(line) {}
    std::size_t index() const noexcept { return index_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t index_;
    std::size_t line_;
};

}  // namespace closegap
