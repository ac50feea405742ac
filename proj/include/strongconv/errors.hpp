#pragma once

#include <stdexcept>
#include <string>

namespace strongconv {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands whose Hilbert-space dimensions do not fit together.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A value violates a type invariant (not Hermitian, not PSD, not normalized, ...).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// A scalar parameter lies outside its admissible domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested computation would exceed the configured dimension or memory budget.
class ResourceExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed external input (JSON structure, CLI shorthand).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A covariance-based formula was requested for a channel without a passing certificate.
class NotCertified : public Error {
 public:
  using Error::Error;
};

}  // namespace strongconv
