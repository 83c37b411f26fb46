#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "nesto/building_set.hpp"
#include "nesto/complex.hpp"
#include "nesto/counting.hpp"
#include "nesto/iso.hpp"
#include "nesto/orders.hpp"
#include "nesto/perms.hpp"
#include "nesto/polynomial.hpp"
#include "nesto/verify.hpp"

namespace nesto {

using Json = nlohmann::json;

// {"n", "sets"} or a graph {"n", "arcs"} / {"n", "edges"} with optional
// "undirected": true. Throws ParseError on malformed input.
BuildingSet building_set_from_json(const Json& j);
DirectedGraph graph_from_json(const Json& j);
// {"legs": [building sets]} or {"leg_lengths": [...], "n", "sets"}.
SpiderSpec spider_from_json(const Json& j);
VertexMap vertex_map_from_json(const Json& j);  // [[source, target], ...] or an object
Word word_from_json(const Json& j);

Json to_json(const BuildingSet& b);
Json to_json(const IntPolynomial& p);
Json to_json(const SimplicialComplex& c);
Json to_json(const VertexMap& m);
Json to_json(const Poset& p);
Json to_json(const RootedForest& f);
Json to_json(const ExtendedFace& f);
Json to_json(const IdentityReport& r);

// Command reports. Each takes parsed input and returns the report body.
Json validate_report(const BuildingSet& b);
Json complex_report(const BuildingSet& b, bool extended);
Json counts_report(const BuildingSet& b, const std::string& what);  // f | h | gamma | ab
Json perms_report(const BuildingSet& b, const std::string& what, const Json& extra);  // list | hops | gamma-chordal
Json order_report(const Json& input, const std::string& what, std::uint64_t seed, int max_n);  // partial-weak | flip | shell
Json iso_report(const Json& input, const std::string& what);  // interval | rotate | rotate-extended | flip | spider2octopus | check
Json geom_report(const BuildingSet& b, const std::string& what, const Json& extra);  // stellar | coords | orient
Json verify_report(const std::vector<CriterionResult>& results, const VerifyOptions& opt);

// Alternate renderings; throw InvalidArgument when a command has none.
std::string render_dot(const Json& input, const std::string& command, const std::string& what, std::uint64_t seed, int max_n);
std::string render_csv(const Json& input, const std::string& command, const std::string& what);

}  // namespace nesto
