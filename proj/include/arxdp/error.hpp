#pragma once

#include <stdexcept>
#include <string>

namespace arxdp {

// Operands of different bit lengths were combined.
class LengthMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Rotation amount outside [1, n-1].
class InvalidRotation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive computation was asked for a size past its enumeration limit.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace arxdp
