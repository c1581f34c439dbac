#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orthoclose {

enum class ErrorCode {
  kDuplicateLabel,
  kUnknownLabel,
  kCycleDetected,
  kEmptyCarrier,
  kNoBottom,
  kNotBounded,
  kSizeLimit,
  kSkeletonTooLarge,
  kNotALattice,
  kNotAtomic,
  kNotMeetSemilattice,
  kUnknownFixture,
  kSyntaxError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateLabel: return "DuplicateLabel";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kEmptyCarrier: return "EmptyCarrier";
    case ErrorCode::kNoBottom: return "NoBottom";
    case ErrorCode::kNotBounded: return "NotBounded";
    case ErrorCode::kSizeLimit: return "SizeLimit";
    case ErrorCode::kSkeletonTooLarge: return "SkeletonTooLarge";
    case ErrorCode::kNotALattice: return "NotALattice";
    case ErrorCode::kNotAtomic: return "NotAtomic";
    case ErrorCode::kNotMeetSemilattice: return "NotMeetSemilattice";
    case ErrorCode::kUnknownFixture: return "UnknownFixture";
    case ErrorCode::kSyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace orthoclose
