#include "peerrate/error.hpp"

namespace peerrate {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ScaleViolation: return "ScaleViolation";
    case ErrorCode::NonBinaryEntry: return "NonBinaryEntry";
    case ErrorCode::NonZeroDiagonal: return "NonZeroDiagonal";
    case ErrorCode::DegenerateNetwork: return "DegenerateNetwork";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace peerrate
