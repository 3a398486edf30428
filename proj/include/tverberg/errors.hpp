#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tverberg {

/// Out-of-range or malformed arguments.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed or invariant-violating input file.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition was not met by the caller.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Two independent computations disagreed. Indicates an arithmetic bug.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Input lacks the general-position property an operation relies on.
class NonGenericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Problem exceeds a configured size cap.
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Partition text could not be parsed; `position()` is a 0-based character offset.
class PartitionParseError : public InvalidParameter {
 public:
  PartitionParseError(const std::string& what, std::size_t position)
      : InvalidParameter(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace tverberg
