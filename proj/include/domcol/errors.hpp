#pragma once

#include <stdexcept>

namespace domcol {

/// Malformed input or a violated precondition (bad vertex id, invalid modulator...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Instance exceeds one of the configured size guards (see guards.hpp).
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace domcol
