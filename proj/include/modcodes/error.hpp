#pragma once

#include <stdexcept>
#include <string>

namespace modcodes {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: out-of-range coordinates, mismatched lengths, bad parameters.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A search or enumeration would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace modcodes
