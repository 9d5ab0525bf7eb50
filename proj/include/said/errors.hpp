#pragma once

#include <stdexcept>
#include <string>

namespace said {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter is outside its documented domain (e.g. chi <= 0, eta >= 2).
class ParamError : public Error {
public:
    using Error::Error;
};

/// A byte stream does not conform to the expected file format.
class FormatError : public Error {
public:
    using Error::Error;
};

/// An API contract was violated (e.g. mismatched lengths or dimensions).
class ContractError : public Error {
public:
    using Error::Error;
};

/// Truncation removed every tap of a filter phase.
class DegenerateFilterError : public Error {
public:
    using Error::Error;
};

} // namespace said
