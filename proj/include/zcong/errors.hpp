#pragma once

#include <stdexcept>
#include <string>

namespace zcong {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DenominatorDivisibleByP : public Error {
 public:
  using Error::Error;
};

class ZeroHasNoValuation : public Error {
 public:
  using Error::Error;
};

class PrimeMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised when a p-adic value cannot be inverted because it is
/// indistinguishable from zero at its precision.
class InsufficientPrecision : public Error {
 public:
  using Error::Error;
};

class IrregularDenominator : public Error {
 public:
  using Error::Error;
};

class DomainViolation : public Error {
 public:
  using Error::Error;
};

class UnknownIdentity : public Error {
 public:
  using Error::Error;
};

class UnknownClaim : public Error {
 public:
  using Error::Error;
};

}  // namespace zcong
