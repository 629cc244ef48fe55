#pragma once

#include <stdexcept>
#include <string>

namespace hearth {

// Errors are exceptions; expected business outcomes (a wrong password, a
// spoofed capture) are values and never thrown.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied structurally invalid data (dimension mismatch, bad topic).
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// Captured frames average to the zero vector.
class DegenerateCapture : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class AlreadyExists : public Error {
 public:
  using Error::Error;
};

/// Persistence or other internal failure.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hearth
