#pragma once

#include <stdexcept>
#include <string>

namespace horolib {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad Cartan matrix, unknown label, wrong algebra.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

// Root closure exceeded its bound.
class NotFiniteType : public Error {
 public:
  using Error::Error;
};

// The requested case is outside what the implementation covers.
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace horolib
