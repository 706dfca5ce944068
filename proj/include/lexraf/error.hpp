#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lexraf {

enum class ErrorKind {
  Parse,
  OutOfRange,
  ArityMismatch,
  ContextMismatch,
  InvalidContext,
  MissingPayoffs,
  WeightArityMismatch,
  UnknownPoint,
  NonContiguousRanks,
  EqualInputs,
  TooManyPoints,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for every library error; `kind()` tells callers
/// (and the CLI's exit-code mapping) which contract was broken.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lexraf
