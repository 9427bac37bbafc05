#pragma once

#include <stdexcept>
#include <string>

namespace diamond {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial or word text, unknown generator, bad coefficient.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Two exact scalars or polynomials over different fields were combined.
class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("operands live over different fields") {}
};

/// An argument violates a documented precondition (non-minimal system in
/// triangle mode, empty pattern, mismatched occurrence, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Step or state budget exhausted: normal form fuse, oracle fuse.
class FuseExceeded : public Error {
 public:
  using Error::Error;
};

/// A truncated construction would exceed its configured basis-size budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace diamond
