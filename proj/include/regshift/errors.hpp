#pragma once

#include <stdexcept>
#include <string>

namespace regshift {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter is outside its documented domain (k < 2, delta out of range, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Input data does not fit the object it is applied to (unknown symbol, empty sequence, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed a configured enumeration or memory budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An object was built in a way that cannot be used (non-terminating chain, bad config file).
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure at runtime: NaN losses, runaway sampling, singular systems.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Malformed text in one of the on-disk formats.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace regshift
