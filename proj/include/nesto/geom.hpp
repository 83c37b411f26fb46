#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nesto/building_set.hpp"
#include "nesto/complex.hpp"

namespace nesto {

using Coords = std::vector<std::int64_t>;

struct StellarStep {
  Subset subdivided;
  int facets_before = 0;
  int facets_after = 0;
};

struct StellarResult {
  SimplicialComplex complex;
  std::vector<StellarStep> steps;
};

// Cross-polytope boundary subdivided at every non-singleton member, largest
// first; throws FaceMissing.
StellarResult stellar_realization(const BuildingSet& b);
// Stellar subdivision of c at face `face` (vertex labels), new vertex `apex`.
SimplicialComplex stellar_subdivide(const SimplicialComplex& c, const std::vector<Vertex>& face, const Vertex& apex);

// Throws NotMaximal.
Coords extended_vertex_coords(const BuildingSet& b, const ExtendedFace& facet);
// Vertex of the Minkowski sum of the unit cube and the simplices
// conv{e_S : S proper in I}: one plus the members through k that are not
// inside F_{<=k}.
Coords minkowski_vertex_coords(const BuildingSet& b, const ExtendedFace& facet);
Coords nestohedron_vertex_coords(const BuildingSet& b, const std::vector<Subset>& facet);

struct Orientation {
  std::vector<ExtendedFace> facets;
  std::vector<Coords> coords;
  std::vector<std::pair<int, int>> edges;  // oriented by increasing c . v
  bool acyclic = false;
};

// Dual graph of the facets oriented by the cost vector; throws NonGenericCost.
Orientation cost_orientation(const BuildingSet& b, const std::vector<std::int64_t>& c, bool extended);
std::vector<std::int64_t> default_cost(int n, bool extended);

}  // namespace nesto
