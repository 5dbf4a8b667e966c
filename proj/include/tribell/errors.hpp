#pragma once

#include <stdexcept>
#include <string>

namespace tribell {

// Input rejected by a type invariant or precondition.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two computations that must agree did not (imaginary residue, dual-path mismatch).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tribell
