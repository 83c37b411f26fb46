#pragma once

#include <string>
#include <vector>

#include "nesto/building_set.hpp"
#include "nesto/complex.hpp"

namespace nesto {

// A constructed building set together with the vertex map between the
// source and target complexes and the checker verdicts.
struct IsoConstruction {
  BuildingSet target;
  VertexMap map;
  bool map_verified = false;  // explicit map carries facets onto facets
  bool isomorphic = false;    // generic search agrees
};

bool is_interval_building_set(const BuildingSet& b);

// Extended complex of b onto the nested complex of b plus the suffix intervals.
IsoConstruction interval_extension(const BuildingSet& b);
// Nested complex onto nested complex; needs every [1,k].
IsoConstruction interval_rotation(const BuildingSet& b);
// Extended onto extended; needs every [1,k] and [k,n].
IsoConstruction extended_interval_rotation(const BuildingSet& b);
BuildingSet flip_building_set(const BuildingSet& b);
// Map on the extended complex, designs included.
IsoConstruction flip(const BuildingSet& b);

struct SpiderSpec {
  std::vector<int> leg_lengths;  // leg i uses labels offset_i+1 .. offset_i+len_i
  BuildingSet b;
  int leg_offset(int i) const;
  // Every combination of leg prefixes [1,k] or nothing, plus the leg sets given.
  static SpiderSpec from_legs(const std::vector<BuildingSet>& legs);
};

struct OctopusSpec {
  std::vector<int> leg_lengths;  // head is label 1; leg i vertex k is 1 + offset_i + k
  BuildingSet b;
  std::vector<Subset> leg_sets;
  std::vector<Subset> suction_cup_sets;
  std::vector<Subset> body_sets;
};

// Literal check of the three spider conditions; empty string when valid.
std::string spider_violation(const SpiderSpec& s);
// Literal asks every leg for the suffixes [v_k, v_l]; SuctionCup asks for the
// prefixes [v_1, v_k] instead, which is what the spider construction yields.
enum class OctopusReading { Literal, SuctionCup };
std::string octopus_violation(const OctopusSpec& o, OctopusReading reading = OctopusReading::Literal);

struct SpiderOctopus {
  OctopusSpec octopus;
  VertexMap map;  // extended complex of the spider onto the nested complex of the octopus
  bool map_verified = false;
  bool isomorphic = false;
  std::string literal_violation;      // octopus_violation under the literal reading
  std::string suction_cup_violation;  // same under the suction-cup reading
};
// Throws NotSpider.
SpiderOctopus spider_to_octopus(const SpiderSpec& s);

// Relabels each label through `map` and checks facets land on facets.
bool check_map(const SimplicialComplex& source, const SimplicialComplex& target, const VertexMap& map);
VertexMap compose(const VertexMap& first, const VertexMap& second);
VertexMap inverse(const VertexMap& m);

}  // namespace nesto
