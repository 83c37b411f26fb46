#include "nesto/error.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace nesto {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Ok: return "Ok";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MissingSingleton: return "MissingSingleton";
    case ErrorCode::UnionClosureViolation: return "UnionClosureViolation";
    case ErrorCode::GroundTooLarge: return "GroundTooLarge";
    case ErrorCode::MemberNotInBuildingSet: return "MemberNotInBuildingSet";
    case ErrorCode::VertexNotInComplex: return "VertexNotInComplex";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotAForest: return "NotAForest";
    case ErrorCode::NotFlag: return "NotFlag";
    case ErrorCode::NotMaximal: return "NotMaximal";
    case ErrorCode::ForestConditionViolated: return "ForestConditionViolated";
    case ErrorCode::NotIntermediary: return "NotIntermediary";
    case ErrorCode::LeapOutOfRange: return "LeapOutOfRange";
    case ErrorCode::NotExtendedBPermutation: return "NotExtendedBPermutation";
    case ErrorCode::NotChordal: return "NotChordal";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::SizeCap: return "SizeCap";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::NotIntervalBuildingSet: return "NotIntervalBuildingSet";
    case ErrorCode::PreconditionIntervalsMissing: return "PreconditionIntervalsMissing";
    case ErrorCode::NotSpider: return "NotSpider";
    case ErrorCode::FaceMissing: return "FaceMissing";
    case ErrorCode::NonGenericCost: return "NonGenericCost";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {
int initial_cap() {
  if (const char* env = std::getenv("NESTO_MAX_N")) {
    try {
      int v = std::stoi(env);
      if (v >= 1 && v <= 30) return v;
    } catch (...) {
    }
  }
  return 16;
}
std::atomic<int>& cap() {
  static std::atomic<int> c{initial_cap()};
  return c;
}
}  // namespace

int max_n() { return cap().load(); }

void set_max_n(int c) {
  if (c < 1 || c > 30) throw Error(ErrorCode::InvalidArgument, "max-n must lie in 1..30");
  cap().store(c);
}

void require_size(int n, const char* what) {
  if (n > max_n())
    throw Error(ErrorCode::GroundTooLarge,
                std::string(what) + ": n = " + std::to_string(n) + " exceeds cap " + std::to_string(max_n()));
}

}  // namespace nesto
