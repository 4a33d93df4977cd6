#pragma once

#include <stdexcept>
#include <string>

namespace lehmer {

// Precondition violated by the caller (zero constant term, k == 0, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two routes that must agree did not, or a value that must be integral
// was not. Indicates a bug, never a user error.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lehmer
