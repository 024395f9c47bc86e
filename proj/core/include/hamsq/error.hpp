#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hamsq {

enum class ErrorCode {
  kVertexNotFound,
  kNonDisjointVertexSets,
  kFreshLabelCollision,
  kInvalidGraph,
  kSizeCapExceeded,
  kDisconnectedInput,
  kTrivialGraph,
  kTooSmall,
  kConstraintOnMissingVertex,
  kNotTwoConnected,
  kSquareNotHamiltonian,
  kWitnessMismatch,
  kBlockGraphNotPath,
  kBadAnchors,
  kPreconditionViolated,
  kWrongShape,
  kBudgetExceeded,
  kMalformedInput,
  kBadParams,
  // A construction produced something a theorem says cannot happen.
  kConstructionDefect,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hamsq
