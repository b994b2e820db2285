#pragma once

#include <stdexcept>
#include <string>

namespace fdivergence {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown generator or objective name.
class RegistryError : public Error {
 public:
  using Error::Error;
};

/// Malformed input: bad probability vector, bad file, bad option value.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// P(a) > 0 where Q(a) = 0 (or the analogous density condition).
class AbsoluteContinuityError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// A NaN was produced, or an iterative method did not converge.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// The denominator generator is not strictly positive away from 1.
class DominationHypothesisError : public Error {
 public:
  using Error::Error;
};

class NormalizationError : public Error {
 public:
  using Error::Error;
};

class SearchFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace fdivergence
