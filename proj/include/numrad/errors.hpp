#pragma once

#include <stdexcept>
#include <string>

namespace numrad {

// Base class for every error the toolkit raises. Each concrete type maps
// 1:1 onto a status code of the C API.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class NotPsd : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownId : public Error {
 public:
  using Error::Error;
};

class ConditionUnsatisfiable : public Error {
 public:
  using Error::Error;
};

// Floating-point outcome that invalidates a single evaluation (negative
// variance beyond the clamp window, non-finite intermediate, ...). The
// suite records these as inconclusive trials.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace numrad
