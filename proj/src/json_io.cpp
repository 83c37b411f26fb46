#include "nesto/json_io.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "nesto/counting.hpp"
#include "nesto/error.hpp"
#include "nesto/geom.hpp"

namespace nesto {

namespace {

template <class F>
auto parsing(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string(what) + ": " + e.what());
  }
}

Subset subset_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "a set must be an array of integers");
  std::vector<int> elems;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error(ErrorCode::ParseError, "set elements must be integers");
    int v = x.get<int>();
    if (v < 1 || v > 32) throw Error(ErrorCode::GroundTooLarge, "label " + std::to_string(v) + " outside 1..32");
    elems.push_back(v);
  }
  return Subset::from_elements(elems);
}

Json subset_json(Subset s) { return s.elements(); }

Json word_json(const Word& w) { return Json(w); }

std::vector<std::string> labels_of(const std::vector<Vertex>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(v.label());
  return out;
}

Json iso_json(const IsoConstruction& r) {
  return {{"target", to_json(r.target)}, {"map", to_json(r.map)}, {"map_verified", r.map_verified}, {"isomorphic", r.isomorphic}};
}

Json subsets_json(const std::vector<Subset>& v) {
  Json out = Json::array();
  for (Subset s : v) out.push_back(subset_json(s));
  return out;
}

}  // namespace

DirectedGraph graph_from_json(const Json& j) {
  return parsing("graph", [&] {
    DirectedGraph g;
    g.n = j.at("n").get<int>();
    const bool undirected = j.value("undirected", false) || j.contains("edges");
    const Json& list = j.contains("arcs") ? j.at("arcs") : j.at("edges");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& a : list) {
      if (!a.is_array() || a.size() != 2) throw Error(ErrorCode::ParseError, "arcs must be pairs");
      pairs.emplace_back(a[0].get<int>(), a[1].get<int>());
    }
    if (undirected) return DirectedGraph::undirected(g.n, pairs);
    g.arcs = pairs;
    g.validate();
    return g;
  });
}

BuildingSet building_set_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "expected a JSON object");
  if (j.contains("arcs") || j.contains("edges")) return from_graph(graph_from_json(j));
  return parsing("building set", [&] {
    const int n = j.at("n").get<int>();
    std::vector<Subset> sets;
    for (const auto& s : j.at("sets")) sets.push_back(subset_from_json(s));
    return BuildingSet::validate(sets, n);
  });
}

SpiderSpec spider_from_json(const Json& j) {
  return parsing("spider", [&] {
    if (j.contains("legs")) {
      std::vector<BuildingSet> legs;
      for (const auto& l : j.at("legs")) legs.push_back(building_set_from_json(l));
      return SpiderSpec::from_legs(legs);
    }
    SpiderSpec s;
    s.leg_lengths = j.at("leg_lengths").get<std::vector<int>>();
    s.b = building_set_from_json(j);
    return s;
  });
}

VertexMap vertex_map_from_json(const Json& j) {
  return parsing("vertex map", [&] {
    VertexMap m;
    if (j.is_object()) {
      for (const auto& [k, v] : j.items()) m[Vertex::parse(k).label()] = Vertex::parse(v.get<std::string>());
    } else {
      for (const auto& p : j) m[Vertex::parse(p.at(0).get<std::string>()).label()] = Vertex::parse(p.at(1).get<std::string>());
    }
    return m;
  });
}

Word word_from_json(const Json& j) {
  return parsing("word", [&] {
    if (j.is_string()) {
      Word w;
      std::stringstream ss(j.get<std::string>());
      for (std::string tok; std::getline(ss, tok, ',');) w.push_back(std::stoi(tok));
      return w;
    }
    return j.get<Word>();
  });
}

Json to_json(const BuildingSet& b) { return {{"n", b.n()}, {"sets", subsets_json(b.sets())}}; }

Json to_json(const IntPolynomial& p) { return p.coeffs(); }

Json to_json(const SimplicialComplex& c) {
  Json facets = Json::array();
  for (const auto& f : c.labeled_facets()) facets.push_back(labels_of(f));
  return {{"vertices", labels_of(c.vertices())},
          {"facets", facets},
          {"facet_count", c.num_facets()},
          {"pure", c.is_pure()},
          {"facet_size", c.facet_size()}};
}

Json to_json(const VertexMap& m) {
  Json out = Json::array();
  for (const auto& [k, v] : m) out.push_back({k, v.label()});
  return out;
}

Json to_json(const Poset& p) {
  Json covers = Json::array();
  for (auto [x, y] : p.covers()) covers.push_back({p.labels()[x], p.labels()[y]});
  return {{"elements", p.labels()}, {"covers", covers}};
}

Json to_json(const RootedForest& f) {
  Json edges = Json::array();
  for (int c : f.nodes.elements())
    if (f.parent[c] != 0) edges.push_back({c, f.parent[c]});
  return {{"nodes", f.nodes.elements()}, {"roots", f.roots()}, {"edges", edges}, {"descents", f.des()}};
}

Json to_json(const ExtendedFace& f) { return labels_of(f.vertices()); }

Json to_json(const IdentityReport& r) {
  Json items = Json::array();
  for (const auto& x : r.results)
    items.push_back({{"name", x.name}, {"holds", x.holds}, {"informational", x.informational}, {"detail", x.detail}});
  return {{"ok", r.ok}, {"identities", items}};
}

Json validate_report(const BuildingSet& b) {
  return {{"valid", true},
          {"building_set", to_json(b)},
          {"size", b.size()},
          {"maximal_elements", subsets_json(maximal_elements(b))},
          {"connected", is_connected(b)},
          {"flag", is_flag(b)},
          {"chordal", is_chordal(b)},
          {"graphical", is_graphical(b)},
          {"strong", is_strong(b)}};
}

Json complex_report(const BuildingSet& b, bool extended) {
  SimplicialComplex c = extended ? extended_nested_complex(b) : nested_complex(b);
  Json j = to_json(c);
  j["kind"] = extended ? "extended" : "nested";
  j["f"] = to_json(f_poly_enum(c));
  return j;
}

Json counts_report(const BuildingSet& b, const std::string& what) {
  if (what == "f")
    return {{"f", to_json(f_nestohedron_recursive(b))},
            {"f_extended", to_json(f_extended_recursive(b, 1))},
            {"f_nested", to_json(f_nested_recursive(b))},
            {"dimension", nestohedron_dim(b)},
            {"dimension_extended", b.rank()}};
  if (what == "h") return {{"h", to_json(h_nestohedron(b))}, {"h_extended", to_json(h_extended_recursive(b))}};
  if (what == "gamma") return {{"gamma", to_json(gamma_nestohedron(b))}, {"gamma_extended", to_json(gamma_extended(b))}};
  if (what == "ab")
    return {{"a", a_number(b)},
            {"b", b_number(b)},
            {"a_rational", a_rational(b).str()},
            {"b_rational", b_rational(b).str()},
            {"even", is_even(b)},
            {"odd", is_odd(b)},
            {"identities", to_json(ab_identities_check(b))},
            {"recursions", to_json(inverse_relations_check(b))}};
  throw Error(ErrorCode::InvalidArgument, "counts: unknown kind '" + what + "'");
}

Json perms_report(const BuildingSet& b, const std::string& what, const Json& extra) {
  if (what == "list") {
    Json partial = Json::array(), extended = Json::array(), forests = Json::array();
    for (const auto& w : b_partial_permutations(b)) partial.push_back(word_json(w));
    for (const auto& w : extended_b_permutations(b)) extended.push_back(word_json(w));
    for (const auto& f : extended_forests(b)) forests.push_back(to_json(f));
    return {{"partial_permutations", partial}, {"extended_permutations", extended}, {"forests", forests}, {"count", partial.size()}};
  }
  if (what == "hops") {
    if (extra.contains("word")) {
      Word w = word_from_json(extra.at("word"));
      const int a = parsing("entry", [&] { return extra.at("entry").get<int>(); });
      auto [h, r] = hop_with_count(b, w, a);
      return {{"word", word_json(w)}, {"entry", a}, {"hop", word_json(h)}, {"leaps", r}};
    }
    Json words = Json::array();
    for (const auto& w : extended_b_permutations(b)) {
      Json hops = Json::object();
      for (int a : w)
        if (is_intermediary(w, a)) hops[std::to_string(a)] = word_json(hop(b, w, a));
      Json topo = Json::array();
      for (Topo t : topography(w)) topo.push_back(topo_name(t));
      words.push_back({{"word", word_json(w)}, {"des", des(w)}, {"topography", topo}, {"hops", hops}});
    }
    return {{"words", words}};
  }
  if (what == "gamma-chordal") {
    DescentGammaReport r = gamma_via_descents(b);
    return {{"h_descents", to_json(r.h_descents)},
            {"gamma_descents", to_json(r.gamma_descents)},
            {"h_counting", to_json(r.h_counting)},
            {"gamma_counting", to_json(r.gamma_counting)},
            {"h_equal", r.h_equal},
            {"gamma_equal", r.gamma_equal},
            {"class_identity_plus", r.class_identity_plus},
            {"class_identity_minus", r.class_identity_minus},
            {"unique_representative", r.unique_representative},
            {"hops_involutive", r.hops_involutive},
            {"hops_commute", r.hops_commute},
            {"hops_odd", r.hops_odd},
            {"classes", r.num_classes}};
  }
  throw Error(ErrorCode::InvalidArgument, "perms: unknown kind '" + what + "'");
}

namespace {

struct OrderInput {
  int n = 0;
  std::optional<BuildingSet> b;
};

OrderInput order_input(const Json& input, int max_n) {
  OrderInput in;
  if (input.is_object() && (input.contains("sets") || input.contains("arcs") || input.contains("edges"))) {
    in.b = building_set_from_json(input);
    in.n = in.b->n();
  } else if (input.is_object() && input.contains("n")) {
    in.n = parsing("order", [&] { return input.at("n").get<int>(); });
  } else {
    in.n = max_n;
  }
  return in;
}

}  // namespace

Json order_report(const Json& input, const std::string& what, std::uint64_t seed, int max_n) {
  OrderInput in = order_input(input, max_n);
  if (what == "partial-weak") {
    Poset p = partial_weak_order(in.n, in.b ? &*in.b : nullptr);
    LatticeReport lr = lattice_check(p);
    Json j = to_json(p);
    j["n"] = in.n;
    j["lattice"] = lr.is_lattice;
    if (p.size() <= 400) {
      std::int64_t lo = 0, hi = 0;
      for (int u = 0; u < p.size(); ++u)
        for (auto m : moebius_row(p, u)) {
          lo = std::min(lo, m);
          hi = std::max(hi, m);
        }
      j["moebius_range"] = {lo, hi};
    }
    return j;
  }
  BuildingSet b = in.b ? *in.b : from_graph(DirectedGraph::undirected(in.n, [&] {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= in.n; ++i)
      for (int k = i + 1; k <= in.n; ++k) e.emplace_back(i, k);
    return e;
  }()));
  if (what == "flip") {
    Json out = Json::object();
    for (bool extended : {false, true}) {
      FlipPoset fp = flip_poset(b, extended);
      Json j = fp.acyclic ? to_json(fp.poset) : Json::object();
      j["acyclic"] = fp.acyclic;
      out[extended ? "extended" : "nested"] = j;
    }
    return out;
  }
  if (what == "shell") {
    std::vector<Word> words;
    Poset p = partial_weak_order(b.n(), &b, &words);
    std::mt19937_64 rng(seed);
    std::vector<int> ext = random_linear_extension(p, rng);
    SimplicialComplex c = extended_nested_complex(b);
    std::map<std::vector<Vertex>, int> index;
    auto labeled = c.labeled_facets();
    for (int k = 0; k < static_cast<int>(labeled.size()); ++k) index[labeled[k]] = k;
    std::vector<int> order;
    Json facets = Json::array();
    for (int e : ext) {
      auto verts = facet_of_partial_permutation(b, words[e]).vertices();
      std::sort(verts.begin(), verts.end());
      auto it = index.find(verts);
      if (it == index.end()) throw Error(ErrorCode::Internal, "facet of a partial permutation is missing");
      order.push_back(it->second);
      facets.push_back({{"word", word_json(words[e])}, {"facet", labels_of(verts)}});
    }
    if (order.size() != labeled.size())
      return {{"ok", false}, {"order", facets}, {"reason", "partial permutations do not cover every facet"}};
    ShellingReport r = verify_shelling(c, order);
    return {{"ok", r.ok}, {"order", facets}, {"i", r.i}, {"j", r.j}};
  }
  throw Error(ErrorCode::InvalidArgument, "order: unknown kind '" + what + "'");
}

Json iso_report(const Json& input, const std::string& what) {
  if (what == "interval") return iso_json(interval_extension(building_set_from_json(input)));
  if (what == "rotate") return iso_json(interval_rotation(building_set_from_json(input)));
  if (what == "rotate-extended") return iso_json(extended_interval_rotation(building_set_from_json(input)));
  if (what == "flip") return iso_json(flip(building_set_from_json(input)));
  if (what == "spider2octopus") {
    SpiderOctopus r = spider_to_octopus(spider_from_json(input));
    Json oct = to_json(r.octopus.b);
    oct["leg_lengths"] = r.octopus.leg_lengths;
    oct["leg_sets"] = subsets_json(r.octopus.leg_sets);
    oct["suction_cup_sets"] = subsets_json(r.octopus.suction_cup_sets);
    oct["body_sets"] = subsets_json(r.octopus.body_sets);
    return {{"octopus", oct},
            {"map", to_json(r.map)},
            {"map_verified", r.map_verified},
            {"isomorphic", r.isomorphic},
            {"literal_violation", r.literal_violation},
            {"suction_cup_violation", r.suction_cup_violation}};
  }
  if (what == "check") {
    auto side = [&](const char* key, const char* flag) {
      BuildingSet b = building_set_from_json(parsing("check", [&] { return input.at(key); }));
      return input.value(flag, false) ? extended_nested_complex(b) : nested_complex(b);
    };
    SimplicialComplex a = side("source", "source_extended");
    SimplicialComplex c = side("target", "target_extended");
    VertexMap m = vertex_map_from_json(parsing("check", [&] { return input.at("map"); }));
    return {{"map_verified", check_map(a, c, m)}, {"isomorphic", is_isomorphic(a, c)}};
  }
  throw Error(ErrorCode::InvalidArgument, "iso: unknown kind '" + what + "'");
}

Json geom_report(const BuildingSet& b, const std::string& what, const Json& extra) {
  if (what == "stellar") {
    StellarResult r = stellar_realization(b);
    Json steps = Json::array();
    for (const auto& s : r.steps)
      steps.push_back({{"subdivided", subset_json(s.subdivided)}, {"facets_before", s.facets_before}, {"facets_after", s.facets_after}});
    return {{"steps", steps}, {"facets", r.complex.num_facets()}, {"matches_extended", r.complex.same_facets(extended_nested_complex(b))}};
  }
  if (what == "coords") {
    Json ext = Json::array(), nest = Json::array();
    for (const auto& f : extended_facets(b))
      ext.push_back({{"facet", to_json(f)}, {"coords", extended_vertex_coords(b, f)}, {"minkowski", minkowski_vertex_coords(b, f)}});
    for (const auto& f : nested_complex(b).labeled_facets()) {
      std::vector<Subset> members;
      for (const auto& v : f) members.push_back(v.set);
      nest.push_back({{"facet", labels_of(f)}, {"coords", nestohedron_vertex_coords(b, members)}});
    }
    return {{"extended", ext}, {"nestohedron", nest}};
  }
  if (what == "orient") {
    const bool extended = extra.value("extended", true);
    std::vector<std::int64_t> cost = extra.contains("cost") ? parsing("cost", [&] { return extra.at("cost").get<std::vector<std::int64_t>>(); })
                                                            : default_cost(b.n(), extended);
    Orientation o = cost_orientation(b, cost, extended);
    Json facets = Json::array();
    for (std::size_t k = 0; k < o.facets.size(); ++k) facets.push_back({{"facet", to_json(o.facets[k])}, {"coords", o.coords[k]}});
    return {{"cost", cost}, {"extended", extended}, {"facets", facets}, {"edges", o.edges}, {"acyclic", o.acyclic}};
  }
  throw Error(ErrorCode::InvalidArgument, "geom: unknown kind '" + what + "'");
}

Json verify_report(const std::vector<CriterionResult>& results, const VerifyOptions& opt) {
  Json items = Json::array();
  int passed = 0;
  for (const auto& r : results) {
    passed += r.pass;
    items.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"checked", r.checked}, {"detail", r.detail}});
  }
  return {{"criteria", items}, {"passed", passed}, {"total", results.size()}, {"max_n", opt.max_n}, {"random_count", opt.random_count}};
}

std::string render_dot(const Json& input, const std::string& command, const std::string& what, std::uint64_t seed, int max_n) {
  if (command == "order" && (what == "partial-weak" || what == "flip")) {
    if (what == "partial-weak") {
      OrderInput in = order_input(input, max_n);
      return partial_weak_order(in.n, in.b ? &*in.b : nullptr).dot();
    }
    FlipPoset fp = flip_poset(building_set_from_json(input), true);
    if (!fp.acyclic) throw Error(ErrorCode::InvalidArgument, "flip relation has a cycle");
    return fp.poset.dot();
  }
  (void)seed;
  if (command == "perms" && what == "list") {
    std::string out;
    for (const auto& f : extended_forests(building_set_from_json(input))) out += f.dot();
    return out;
  }
  if (command == "complex") {
    BuildingSet b = building_set_from_json(input);
    SimplicialComplex c = what == "nested" ? nested_complex(b) : extended_nested_complex(b);
    std::set<std::pair<int, int>> edges;
    for (const auto& f : c.facets())
      for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t k = i + 1; k < f.size(); ++k) edges.emplace(f[i], f[k]);
    std::ostringstream os;
    os << "graph complex {\n";
    for (std::size_t v = 0; v < c.vertices().size(); ++v) os << "  " << v << " [label=\"" << c.vertices()[v].label() << "\"];\n";
    for (auto [x, y] : edges) os << "  " << x << " -- " << y << ";\n";
    os << "}\n";
    return os.str();
  }
  if (command == "geom" && what == "orient") {
    BuildingSet b = building_set_from_json(input);
    Orientation o = cost_orientation(b, default_cost(b.n(), true), true);
    std::ostringstream os;
    os << "digraph orientation {\n";
    for (std::size_t k = 0; k < o.facets.size(); ++k) {
      std::string label;
      for (const auto& v : o.facets[k].vertices()) label += (label.empty() ? "" : " ") + v.label();
      os << "  " << k << " [label=\"" << label << "\"];\n";
    }
    for (auto [x, y] : o.edges) os << "  " << x << " -> " << y << ";\n";
    os << "}\n";
    return os.str();
  }
  throw Error(ErrorCode::InvalidArgument, "no DOT rendering for " + command + " " + what);
}

std::string render_csv(const Json& input, const std::string& command, const std::string& what) {
  std::ostringstream os;
  if (command == "geom" && what == "coords") {
    BuildingSet b = building_set_from_json(input);
    os << "facet";
    for (int k = 1; k <= b.n(); ++k) os << ",v" << k;
    os << "\n";
    for (const auto& f : extended_facets(b)) {
      std::string label;
      for (const auto& v : f.vertices()) label += (label.empty() ? "" : " ") + v.label();
      os << '"' << label << '"';
      for (auto x : extended_vertex_coords(b, f)) os << "," << x;
      os << "\n";
    }
    return os.str();
  }
  if (command == "counts" && what != "ab") {
    Json j = counts_report(building_set_from_json(input), what);
    os << "series,coefficients\n";
    for (const auto& [k, v] : j.items())
      if (v.is_array()) {
        os << k;
        for (const auto& c : v) os << "," << c.get<std::int64_t>();
        os << "\n";
      }
    return os.str();
  }
  throw Error(ErrorCode::InvalidArgument, "no CSV rendering for " + command + " " + what);
}

}  // namespace nesto
