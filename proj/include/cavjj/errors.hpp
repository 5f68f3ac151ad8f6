#pragma once

#include <stdexcept>
#include <string>

namespace cavjj {

// Base of every library error. The CLI maps the subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter or argument lies outside its mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// δ·N·U₀/2 vanishes, so the reduced parameters are undefined.
class ScaleZeroError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Numerical failure: singular state, non-convergence, undefined diagnostics.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// |z| reached the pole of the equations of motion at ±1.
class SingularityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// A trajectory does not cross its mean often enough to define a period.
class NonOscillatoryError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Bad command line or configuration.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace cavjj
