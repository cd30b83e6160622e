#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lgc {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kDegreeExceeded,
  kSelfLoop,
  kInfeasible,
  kRetryExhausted,
  kSizeMismatch,
  kRadiusExceeded,
  kBudgetExceeded,
  kSpaceMismatch,
  kEmptySet,
  kNotRegular,
  kDisconnected,
  kPaletteOverflow,
  kAmbiguousIntersection,
  kConvergenceFailure,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every library failure is reported through this one exception type; callers
// that need to branch (the CLI exit-code contract, tests) switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kDegreeExceeded: return "DegreeExceeded";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kRetryExhausted: return "RetryExhausted";
    case ErrorCode::kSizeMismatch: return "SizeMismatch";
    case ErrorCode::kRadiusExceeded: return "RadiusExceeded";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kSpaceMismatch: return "SpaceMismatch";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kNotRegular: return "NotRegular";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kPaletteOverflow: return "PaletteOverflow";
    case ErrorCode::kAmbiguousIntersection: return "AmbiguousIntersection";
    case ErrorCode::kConvergenceFailure: return "ConvergenceFailure";
  }
  return "Unknown";
}

}  // namespace lgc
