#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nesto/building_set.hpp"

namespace nesto {

struct Instance {
  std::string name;
  BuildingSet b;
};

using EdgeList = std::vector<std::pair<int, int>>;

DirectedGraph path_graph(int n);
DirectedGraph cycle_graph(int n);
DirectedGraph complete_graph(int n);
// Centre is vertex n + 1; leaves 1..n.
DirectedGraph star_graph(int n);

// Image of b under i -> perm[i - 1].
BuildingSet relabel(const BuildingSet& b, const std::vector<int>& perm);
// Lexicographically least sorted mask list over all relabelings; n <= 8.
std::vector<Mask> canonical_form(const BuildingSet& b);

// Building sets of undirected graphs on n <= max_n and of digraphs on
// n <= max_directed_n, one per isomorphism class, graphs on [n] only.
std::vector<Instance> graphical_family(int max_n, int max_directed_n);
// Closures of random families with a random ground set size in [1, max_n].
std::vector<Instance> random_family(int count, int max_n, std::uint64_t seed);
// Flag building sets on exactly n elements: named graphs, random undirected
// graphs and flag random closures.
std::vector<Instance> flag_family(int n, int count, std::uint64_t seed);

// Forests without isolated vertices and with 1..max_edges edges, one per
// isomorphism class, vertices labeled 1..|V|.
std::vector<std::pair<int, EdgeList>> forests_up_to(int max_edges);

}  // namespace nesto
