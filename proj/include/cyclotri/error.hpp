#pragma once

#include <stdexcept>
#include <string>

namespace cyclotri {

/// Raised for violated preconditions and malformed input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a consistency check that must hold by construction fails.
/// Seeing one of these means a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace cyclotri
