#pragma once

#include <stdexcept>
#include <string>

namespace finstrain {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Non-finite entries or otherwise malformed arguments.
class InvalidInput : public Error {
public:
  using Error::Error;
};

/// A scalar function was asked to act outside its domain.
class DomainError : public Error {
public:
  DomainError(const std::string &what, double offending)
      : Error(what), offending_(offending) {}

  /// The eigenvalue (or scalar) that left the domain.
  double offending() const noexcept { return offending_; }

private:
  double offending_;
};

/// det F <= 0 where a proper deformation gradient is required.
class OrientationError : public Error {
public:
  using Error::Error;
};

/// det = 0. Derives from OrientationError since a singular gradient is
/// never orientation preserving either.
class SingularError : public OrientationError {
public:
  using OrientationError::OrientationError;
};

class UnknownFamily : public Error {
public:
  using Error::Error;
};

class NonCoaxial : public Error {
public:
  using Error::Error;
};

/// (y, z) pair outside the realizable range 0 <= z^2/y^3 <= 1/6.
class NotRealizable : public Error {
public:
  using Error::Error;
};

class PotentialError : public Error {
public:
  using Error::Error;
};

/// Two independent evaluation routes disagreed beyond tolerance.
class ConsistencyError : public Error {
public:
  using Error::Error;
};

} // namespace finstrain
