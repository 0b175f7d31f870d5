#pragma once

#include <stdexcept>
#include <string>

namespace cy3 {

/// Raised when inputs violate an operation's preconditions (alphabet
/// mismatch, wrong degree, singular matrix, ...).
class AlgebraError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace cy3
