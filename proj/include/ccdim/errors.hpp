#pragma once

#include <stdexcept>
#include <string>

namespace ccdim {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input violates an operation's precondition (non-prime p, r > k, rank-deficient generator, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed a configured cap (see caps.hpp).
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// Malformed code file or command-line input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Two independent computations of the same quantity disagreed.
class CrossCheckFailure : public Error {
public:
    using Error::Error;
};

}  // namespace ccdim
