#pragma once

#include <stdexcept>
#include <string>

namespace rmt {

// Argument outside a function's certified or admissible range.
struct RangeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A convergence target could not be met within the configured budget.
struct AccuracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An integration or recursion left the region where the result is trusted.
struct InstabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Generic numerical failure (eigensolver cap, inconsistent determinant, ...).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InsufficientDataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A rejection sampler exhausted its attempt budget.
struct FeasibilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SizeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal invariant violated; indicates a bug, not bad input.
struct LogicError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace rmt
