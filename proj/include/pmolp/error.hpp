#pragma once

#include <stdexcept>
#include <string>

namespace pmolp {

/// Base class for everything the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (bad point, bad index, bad option).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Operands whose sizes do not agree (point vs. matrix, weights vs. criteria).
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// The simplex solver could not produce a trustworthy answer.
class SolverFailure : public Error {
public:
    using Error::Error;
};

/// Face enumeration refused because n exceeds the enumeration cap.
class SizeCapExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace pmolp
