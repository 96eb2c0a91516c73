#pragma once

#include <stdexcept>
#include <string>

namespace ffa {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition or contract was violated by the caller.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A search or fixed-point iteration ran past its budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed (parity of 2g-2, integrality, ...).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ffa
