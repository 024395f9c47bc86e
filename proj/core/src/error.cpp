#include "hamsq/error.hpp"

namespace hamsq {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kVertexNotFound: return "VertexNotFound";
    case ErrorCode::kNonDisjointVertexSets: return "NonDisjointVertexSets";
    case ErrorCode::kFreshLabelCollision: return "FreshLabelCollision";
    case ErrorCode::kInvalidGraph: return "InvalidGraph";
    case ErrorCode::kSizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::kDisconnectedInput: return "DisconnectedInput";
    case ErrorCode::kTrivialGraph: return "TrivialGraph";
    case ErrorCode::kTooSmall: return "TooSmall";
    case ErrorCode::kConstraintOnMissingVertex: return "ConstraintOnMissingVertex";
    case ErrorCode::kNotTwoConnected: return "NotTwoConnected";
    case ErrorCode::kSquareNotHamiltonian: return "SquareNotHamiltonian";
    case ErrorCode::kWitnessMismatch: return "WitnessMismatch";
    case ErrorCode::kBlockGraphNotPath: return "BlockGraphNotPath";
    case ErrorCode::kBadAnchors: return "BadAnchors";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kWrongShape: return "WrongShape";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kMalformedInput: return "MalformedInput";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kConstructionDefect: return "ConstructionDefect";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace hamsq
