#pragma once

#include <stdexcept>
#include <string>

namespace nesto {

enum class ErrorCode {
  Ok = 0,
  InvalidArgument,
  ParseError,
  MissingSingleton,
  UnionClosureViolation,
  GroundTooLarge,
  MemberNotInBuildingSet,
  VertexNotInComplex,
  SearchBudgetExceeded,
  NotPure,
  NotSymmetric,
  NotAForest,
  NotFlag,
  NotMaximal,
  ForestConditionViolated,
  NotIntermediary,
  LeapOutOfRange,
  NotExtendedBPermutation,
  NotChordal,
  NotConnected,
  SizeCap,
  NotComparable,
  NotIntervalBuildingSet,
  PreconditionIntervalsMissing,
  NotSpider,
  FaceMissing,
  NonGenericCost,
  Overflow,
  Internal,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Ground-set cap for exponential enumerations. Reads NESTO_MAX_N once; default 16.
int max_n();
void set_max_n(int cap);
void require_size(int n, const char* what);

}  // namespace nesto
