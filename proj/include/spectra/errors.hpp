#pragma once

#include <stdexcept>
#include <string>

namespace spectra {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input data (fixture text, inconsistent structure constants).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The computation is outside what the library can decide (e.g. a
/// factorization over Q beyond the supported degree, or an undecidable
/// search over an infinite lattice).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// A hypothesis of the underlying theory fails for this backend, so the
/// requested object does not exist (e.g. no prime monoform representative).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed its budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Two routes that must agree did not; indicates a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace spectra
