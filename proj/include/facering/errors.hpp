#pragma once

#include <stdexcept>
#include <string>

namespace facering {

/// An input violates the documented precondition of an operation.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The instance exceeds a documented size bound (ground set, face count).
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A document could not be parsed into a complex or graph.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations that must agree did not.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace facering
