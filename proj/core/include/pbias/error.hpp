#pragma once

#include <stdexcept>
#include <string>

namespace pbias {

// Root of every exception the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An argument violates an operation's precondition (q < 1, coordinate out of
// range, bias outside (0,1), ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Dense tables are limited to kMaxCoordinates; oracles to kOracleMaxCoordinates.
class CapacityError : public Error {
public:
    using Error::Error;
};

// Function, measure or expansion disagree on the coordinate count.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// Malformed input file or document.
class FormatError : public Error {
public:
    using Error::Error;
};

}  // namespace pbias
