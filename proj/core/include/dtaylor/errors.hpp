#pragma once

#include <stdexcept>

namespace dtaylor {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the domain of an operation (x not in (a, b], n < 1, ...).
struct DomainError : Error {
  using Error::Error;
};

// An endpoint limit was required but the function has none (e.g. tan at
// pi/2-).
struct EndpointError : Error {
  using Error::Error;
};

// Two series were combined but live on different intervals.
struct IntervalMismatchError : Error {
  using Error::Error;
};

// A computed fact contradicts declared metadata (e.g. a sign scan found a
// negative coefficient in a series declared non-negative).
struct InconsistencyError : Error {
  using Error::Error;
};

// The operation is not available for this input (e.g. a nesting chain for a
// mixed-sign series).
struct UnsupportedError : Error {
  using Error::Error;
};

// A degree parameter is too small to cover the negative coefficient indices.
struct DegreeTooSmallError : Error {
  using Error::Error;
};

}  // namespace dtaylor
