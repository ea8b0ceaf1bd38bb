#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace linegeom {

enum class ErrorCode {
  // structure validation
  ShortLine,
  DuplicateLine,
  PairOnNoLine,
  PairOnTwoLines,
  InvalidPoint,
  UnknownPoint,
  UnknownLine,
  NotClosed,
  // resource limits
  SearchBudgetExceeded,
  SizeCapExceeded,
  BudgetExceeded,
  // preconditions
  PreconditionViolated,
  UnsupportedOrder,
  WrongProvenance,
  NotThreeDimensional,
  NotGeneralizedProjective,
  NotMaximal,
  NotRelatedSet,
  NotBijective,
  HypothesisViolated,
  DimensionTooSmall,
  NotCollineation,
  NotCorrelation,
  NotStarPreserving,
  NotCoplanarPreserving,
  // internal consistency alarms; reachable only through a library bug
  ImageNotMaximal,
  NonUniformStarImages,
  WellDefinednessFailure,
  TargetNotGenProjDim3,
  SourceNotGenProjDim3,
  // file formats
  FormatError,
};

const char* to_string(ErrorCode code);

/// Library-wide exception. `detail()` carries the ids a witness refers to
/// (points, lines, limits) in an error-specific order.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message,
        std::vector<long long> detail = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        detail_(std::move(detail)) {}

  ErrorCode code() const { return code_; }
  const std::vector<long long>& detail() const { return detail_; }

private:
  ErrorCode code_;
  std::vector<long long> detail_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message,
                               std::vector<long long> detail = {}) {
  throw Error(code, message, std::move(detail));
}

}  // namespace linegeom
