#pragma once

#include <stdexcept>
#include <string>

namespace gf {

// Base for every error the library reports on bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Elements or cochains from different parents were combined.
class ParentMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class NotACocycle : public Error {
 public:
  using Error::Error;
};

class ExactnessViolation : public Error {
 public:
  using Error::Error;
};

class NoLocalLift : public Error {
 public:
  using Error::Error;
};

// Raised when an internal identity that must hold by construction fails.
// Not an input problem; the CLI maps it to exit code 3.
class InvariantBreach : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void ensure(bool condition, const std::string& what) {
  if (!condition) throw InvariantBreach(what);
}

}  // namespace gf
