#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nesto/building_set.hpp"

namespace nesto {

// Vertex label of a complex: a building-set member, a design vertex x_i, or
// a plain integer label for abstract complexes.
struct Vertex {
  enum class Kind : std::uint8_t { Member = 0, Design = 1, Plain = 2 };
  Kind kind = Kind::Plain;
  Subset set;
  int index = 0;

  static Vertex member(Subset s) { return {Kind::Member, s, 0}; }
  static Vertex design(int i) { return {Kind::Design, Subset{}, i}; }
  static Vertex plain(int i) { return {Kind::Plain, Subset{}, i}; }

  bool is_member() const { return kind == Kind::Member; }
  bool is_design() const { return kind == Kind::Design; }
  // "{1,2}", "x_3", "v7"; the empty member prints as "{}".
  std::string label() const;
  static Vertex parse(const std::string& label);

  bool operator==(const Vertex&) const = default;
};

// Members in canonical subset order, then designs, then plain labels.
bool operator<(const Vertex& a, const Vertex& b);

using Face = std::vector<int>;  // sorted vertex indices

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  // Drops duplicate and non-maximal facets. An empty facet list yields the
  // void complex; a list holding one empty facet yields {∅}.
  static SimplicialComplex from_facets(const std::vector<std::vector<Vertex>>& facets);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Face>& facets() const { return facets_; }
  std::size_t num_facets() const { return facets_.size(); }
  std::optional<int> index_of(const Vertex& v) const;
  std::vector<Vertex> labels(const Face& f) const;
  std::vector<std::vector<Vertex>> labeled_facets() const;
  bool is_pure() const;
  // Facet cardinality for pure complexes, -1 otherwise.
  int facet_size() const;
  bool is_face(const Face& f) const;
  // Every face, including the empty face, in canonical order.
  std::vector<Face> all_faces() const;
  // Subcomplex induced on a vertex subset (faces contained in it).
  SimplicialComplex induced(const std::vector<int>& vertex_subset) const;

  // Equality of the labeled facet families.
  bool same_facets(const SimplicialComplex& o) const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Face> facets_;
};

// Face enumeration of nested complexes.
struct ExtendedFace {
  std::vector<Subset> members;  // canonical order
  std::vector<int> designs;     // increasing
  std::vector<Vertex> vertices() const;
  bool operator==(const ExtendedFace&) const = default;
};

bool is_nested(const BuildingSet& b, const std::vector<Subset>& members);
bool is_extended_nested(const BuildingSet& b, const std::vector<Subset>& members,
                        const std::vector<int>& designs);

// All maximal nested collections of b|_s, each including the maximal
// elements of b|_s.
std::vector<std::vector<Subset>> maximal_nested_with_maxima(const BuildingSet& b, Subset s);
std::vector<ExtendedFace> extended_facets(const BuildingSet& b);

SimplicialComplex nested_complex(const BuildingSet& b);
SimplicialComplex extended_nested_complex(const BuildingSet& b);

// Join of complexes with pairwise disjoint vertex labels.
SimplicialComplex join(const std::vector<SimplicialComplex>& parts);
SimplicialComplex link(const SimplicialComplex& c, const Vertex& v);

using VertexMap = std::map<std::string, Vertex>;  // keyed by source label

struct LinkDecomposition {
  bool design = false;
  std::vector<BuildingSet> components;  // design case
  BuildingSet restricted;               // member case: b|_C
  BuildingSet contracted;               // member case: b/C
  SimplicialComplex explicit_link;
  SimplicialComplex model;              // the stated join, with labels mapped into the link
  bool map_verified = false;            // explicit map sends model facets onto link facets
  bool isomorphic = false;              // confirmed by the generic checker
};

LinkDecomposition link_decomposition(const BuildingSet& b, const Vertex& v);

std::vector<std::vector<int>> minimal_non_faces(const SimplicialComplex& c);
SimplicialComplex independence_complex(const SimplicialComplex& c);
// Edges of the 1-skeleton of the independence complex, as vertex index pairs.
std::vector<std::pair<int, int>> independence_graph(const SimplicialComplex& c);

struct StrongComponent {
  std::vector<Subset> members;
  int m_size = 0;
};
std::vector<StrongComponent> strongly_connected_components(const BuildingSet& b);
bool is_strong(const BuildingSet& b);

struct IsoOptions {
  std::int64_t node_budget = 50'000'000;
};
// Vertex bijection carrying facets onto facets, or nullopt.
std::optional<std::vector<int>> find_isomorphism(const SimplicialComplex& a,
                                                 const SimplicialComplex& b,
                                                 IsoOptions opts = {});
bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);
// Checks that `map` (label -> label) is a bijection on vertices sending the
// facets of a exactly onto the facets of b.
bool verify_vertex_map(const SimplicialComplex& a, const SimplicialComplex& b, const VertexMap& map);

}  // namespace nesto
