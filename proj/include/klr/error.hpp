#pragma once

#include <stdexcept>
#include <string>

namespace klr {

// Operands of different ranks were combined.
class RankMismatch : public std::invalid_argument {
 public:
  RankMismatch(int lhs, int rhs)
      : std::invalid_argument("rank mismatch: " + std::to_string(lhs) + " vs " +
                              std::to_string(rhs)) {}
};

// Malformed textual input; the message names the offending position.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A sweep or computation was requested beyond the configured rank ceiling.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace klr
