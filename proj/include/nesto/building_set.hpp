#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nesto/subset.hpp"

namespace nesto {

struct DirectedGraph {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;

  static DirectedGraph undirected(int n, const std::vector<std::pair<int, int>>& edges);
  bool has_arc(int u, int v) const;
  // Normalizes arc order and rejects loops, duplicates and out-of-range nodes.
  void validate() const;
};

// Family of nonempty subsets of a ground set closed under unions of
// intersecting members and containing every singleton of the ground set.
// Labels are never renumbered: restrictions keep the ambient labels.
class BuildingSet {
 public:
  BuildingSet() = default;

  // Throws MissingSingleton / UnionClosureViolation.
  static BuildingSet validate(std::span<const Subset> sets, int n);
  // Smallest building set on `ground` containing `sets`.
  static BuildingSet closure(std::span<const Subset> sets, Subset ground, int n);
  // Caller guarantees the axioms; used internally by restriction/contraction.
  static BuildingSet trusted(int n, Subset ground, std::vector<Subset> sets);

  int n() const { return n_; }
  Subset ground() const { return ground_; }
  int rank() const { return ground_.size(); }
  const std::vector<Subset>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool contains(Subset s) const;
  bool empty() const { return ground_.empty(); }

  bool operator==(const BuildingSet& o) const {
    return ground_ == o.ground_ && sets_ == o.sets_;
  }

 private:
  int n_ = 0;
  Subset ground_;
  std::vector<Subset> sets_;   // canonical order
  std::vector<Mask> lookup_;   // sorted masks
};

BuildingSet from_graph(const DirectedGraph& g);
// Witness graph when the building set is graphical.
std::optional<DirectedGraph> graphical_witness(const BuildingSet& b);
bool is_graphical(const BuildingSet& b);

BuildingSet restriction(const BuildingSet& b, Subset s);
BuildingSet contraction(const BuildingSet& b, Subset i);

std::vector<Subset> maximal_elements(const BuildingSet& b);
// Maximal elements of b restricted to s, without materializing the restriction.
std::vector<Subset> maximal_elements(const BuildingSet& b, Subset s);
std::vector<BuildingSet> connected_components(const BuildingSet& b);
bool is_connected(const BuildingSet& b);
bool is_chordal(const BuildingSet& b);
bool is_flag(const BuildingSet& b);

// Number of members of b containing element i.
int count_containing(const BuildingSet& b, int i);

// Order-normalized key for deduplication: ground mask followed by member masks.
std::vector<Mask> canonical_key(const BuildingSet& b);

}  // namespace nesto
