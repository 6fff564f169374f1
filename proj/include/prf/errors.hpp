#pragma once

#include <stdexcept>
#include <string>

namespace prf {

// Malformed text input (fields, elements, rational functions).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A requested computation is larger than the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal cross-check failed. Never expected on valid input.
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace prf
