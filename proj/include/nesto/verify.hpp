#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nesto/complex.hpp"
#include "nesto/instances.hpp"

namespace nesto {

struct VerifyOptions {
  int max_n = 5;            // instance sizes are the stated ones capped at max_n
  std::uint64_t seed = 7;
  int random_count = 100;
  int shelling_samples = 20;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  int checked = 0;         // instances or cases examined
  std::string detail;      // first failure, or a summary
  double seconds = 0;
};

// The instance family shared by the purity, recursion and a/b criteria:
// graphical b on n <= min(5, max_n), digraphs included, plus seeded random closures.
std::vector<Instance> base_family(const VerifyOptions& opt);

inline constexpr int kCriteria = 14;
CriterionResult verify_criterion(int id, const VerifyOptions& opt);
std::vector<CriterionResult> verify_all(const VerifyOptions& opt);

// Named fixtures used by the suite.
BuildingSet example_polytopality();  // {{1},{2},{3},{1,2},{1,2,3}}
BuildingSet remark_target();         // target of the printed non-interval map
VertexMap remark_map();              // the printed map onto remark_target()

}  // namespace nesto
