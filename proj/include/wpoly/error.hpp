#pragma once

#include <stdexcept>
#include <string>

namespace wpoly {

/// Base of every error raised by the library.  The CLI maps these to exit
/// status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotDivisible : public Error {
 public:
  NotDivisible() : Error("not divisible") {}
};

class NonInvertible : public Error {
 public:
  NonInvertible() : Error("non-invertible") {}
};

/// Raised when an identity that must hold exactly fails (a d-denominator that
/// does not cancel, a transfer-matrix relation that breaks).
class NormalizationFailure : public Error {
 public:
  explicit NormalizationFailure(const std::string& what)
      : Error("normalization failure: " + what) {}
};

class GraphError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace wpoly
