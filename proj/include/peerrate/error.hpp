#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace peerrate {

enum class ErrorCode {
  DimensionMismatch,
  ScaleViolation,
  NonBinaryEntry,
  NonZeroDiagonal,
  DegenerateNetwork,
  NoConvergence,
  EmptyInput,
  IndexOutOfRange,
  InvalidArgument,
  MalformedInput,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI, the Python module) can map it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace peerrate
