#include "nesto/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "nesto/complex.hpp"
#include "nesto/counting.hpp"
#include "nesto/error.hpp"
#include "nesto/geom.hpp"
#include "nesto/iso.hpp"
#include "nesto/orders.hpp"
#include "nesto/perms.hpp"

namespace nesto {

namespace {

int capped(const VerifyOptions& opt, int stated) { return opt.max_n >= 5 ? stated : std::min(stated, opt.max_n); }

std::string describe(const BuildingSet& b) {
  std::string s = "n=" + std::to_string(b.n()) + " {";
  for (std::size_t i = 0; i < b.sets().size(); ++i) s += (i ? "," : "") + b.sets()[i].str();
  return s + "}";
}

// Accumulates a pass/fail verdict with the first failure kept as detail.
struct Tally {
  int checked = 0;
  std::string failure;
  void check(bool ok, const std::function<std::string()>& what) {
    ++checked;
    if (!ok && failure.empty()) failure = what();
  }
};

Subset S(std::initializer_list<int> e) { return Subset::of(e); }

CriterionResult purity(const VerifyOptions& opt) {
  Tally t;
  for (const auto& in : base_family(opt)) {
    SimplicialComplex c = extended_nested_complex(in.b);
    t.check(c.is_pure() && c.facet_size() == in.b.rank(), [&] { return in.name + " " + describe(in.b); });
  }
  return {1, "purity", t.failure.empty(), t.checked, t.failure, 0};
}

CriterionResult recursions(const VerifyOptions& opt) {
  Tally t;
  for (const auto& in : base_family(opt)) {
    const BuildingSet& b = in.b;
    IntPolynomial fn = f_poly_enum(nested_complex(b));
    IntPolynomial fe = f_extended_enum(b);
    t.check(f_nested_recursive(b) == fn, [&] { return in.name + ": f_N recursion"; });
    t.check(f_nestohedron_recursive(b) == f_nestohedron_enum(b), [&] { return in.name + ": f_P recursion"; });
    t.check(f_extended_recursive(b, 1) == fe, [&] { return in.name + ": extended form 1"; });
    t.check(f_extended_recursive(b, 2) == fe, [&] { return in.name + ": extended form 2"; });
    t.check(h_extended_recursive(b) == h_poly(fe), [&] { return in.name + ": h extended recursion"; });
    IdentityReport rep = inverse_relations_check(b);
    t.check(rep.ok, [&] { return in.name + ": " + rep.first_failure()->name + " " + rep.first_failure()->detail; });
  }
  return {2, "f/h recursions vs enumeration", t.failure.empty(), t.checked, t.failure, 0};
}

CriterionResult dehn_sommerville(const VerifyOptions& opt) {
  Tally t;
  for (const auto& in : base_family(opt)) {
    IntPolynomial he = h_poly(f_extended_enum(in.b));
    IntPolynomial hp = h_poly(f_nestohedron_enum(in.b));
    t.check(he.palindromic(in.b.rank()), [&] { return in.name + ": extended h " + he.str(); });
    t.check(hp.palindromic(nestohedron_dim(in.b)), [&] { return in.name + ": nestohedron h " + hp.str(); });
  }
  return {3, "Dehn-Sommerville symmetry", t.failure.empty(), t.checked, t.failure, 0};
}

CriterionResult gal(const VerifyOptions& opt) {
  Tally t;
  int skipped = 0;
  auto run = [&](const Instance& in) {
    if (!is_flag(in.b)) {
      ++skipped;
      return;
    }
    IntPolynomial g = gamma_extended(in.b);
    t.check(g.nonnegative(), [&] { return in.name + ": gamma " + g.str(); });
  };
  for (const auto& in : base_family(opt)) run(in);
  const int top = capped(opt, 6);
  if (top >= 6)
    for (const auto& in : flag_family(6, 40, opt.seed)) run(in);
  std::string summary = std::to_string(skipped) + " non-flag instances skipped";
  return {4, "gamma nonnegative on flag extended nestohedra", t.failure.empty(), t.checked,
          t.failure.empty() ? summary : t.failure, 0};
}

CriterionResult chordal(const VerifyOptions& opt) {
  Tally t;
  BuildingSet k2 = from_graph(complete_graph(2));
  DescentGammaReport a = gamma_via_descents(k2);
  t.check(a.h_descents == IntPolynomial({1, 3, 1}) && a.gamma_descents == IntPolynomial({1, 1}),
          [&] { return "K2 anchor: h " + a.h_descents.str() + " gamma " + a.gamma_descents.str(); });
  // Chordality depends on the labeling, so every relabeling of each class is tried.
  std::set<std::vector<Mask>> done;
  for (const auto& in : graphical_family(capped(opt, 5), capped(opt, 5))) {
    if (!is_connected(in.b)) continue;
    std::vector<int> perm(in.b.n());
    std::iota(perm.begin(), perm.end(), 1);
    do {
      BuildingSet b = relabel(in.b, perm);
      if (!is_chordal(b)) continue;
      if (!done.insert(canonical_key(b)).second) continue;
      DescentGammaReport r = gamma_via_descents(b);
      t.check(r.h_equal, [&] { return describe(b) + ": h " + r.h_descents.str() + " vs " + r.h_counting.str(); });
      t.check(r.gamma_equal, [&] { return describe(b) + ": gamma " + r.gamma_descents.str() + " vs " + r.gamma_counting.str(); });
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return {5, "chordal h and gamma via descents", t.failure.empty(), t.checked, t.failure, 0};
}

CriterionResult bijections(const VerifyOptions& opt) {
  Tally t;
  BuildingSet k2 = from_graph(complete_graph(2));
  t.check(extended_facets(k2).size() == 5 && b_partial_permutations(k2).size() == 5,
          [] { return std::string("K2 count is not 5"); });
  for (const auto& in : base_family(opt)) {
    if (!is_connected(in.b) || in.b.ground() != Subset::full(in.b.n())) continue;
    const std::size_t facets = extended_facets(in.b).size();
    const std::size_t forests = extended_forests(in.b).size();
    const std::size_t partial = b_partial_permutations(in.b).size();
    const std::size_t ext = extended_b_permutations(in.b).size();
    t.check(facets == forests && forests == partial && partial == ext, [&] {
      std::ostringstream o;
      o << in.name << ": facets " << facets << " forests " << forests << " partial " << partial << " extended " << ext;
      return o.str();
    });
  }
  return {6, "bijection cardinalities", t.failure.empty(), t.checked, t.failure, 0};
}

CriterionResult coordinates(const VerifyOptions& opt) {
  Tally t;
  BuildingSet k3 = from_graph(complete_graph(3));
  Coords n1 = extended_vertex_coords(k3, {{S({2}), S({2, 3})}, {1}});
  Coords n2 = extended_vertex_coords(k3, {{S({3}), S({1, 3}), S({1, 2, 3})}, {}});
  t.check(n1 == Coords{0, 4, 3}, [] { return std::string("N1 coordinates differ from (0,4,3)"); });
  t.check(n2 == Coords{3, 2, 4}, [] { return std::string("N2 coordinates differ from (3,2,4)"); });
  int colliding = 0, minkowski_colliding = 0, family = 0;
  for (const auto& in : base_family(opt)) {
    ++family;
    std::set<Coords> seen, seen_m;
    auto facets = extended_facets(in.b);
    for (const auto& f : facets) {
      seen.insert(extended_vertex_coords(in.b, f));
      seen_m.insert(minkowski_vertex_coords(in.b, f));
    }
    if (seen.size() != facets.size()) ++colliding;
    if (seen_m.size() != facets.size()) ++minkowski_colliding;
    t.check(seen.size() == facets.size(), [&] { return in.name + " " + describe(in.b) + ": repeated extended coordinates"; });
    std::set<Coords> seen_p;
    auto nested = nested_complex(in.b).labeled_facets();
    for (const auto& f : nested) {
      std::vector<Subset> members;
      for (const auto& v : f) members.push_back(v.set);
      seen_p.insert(nestohedron_vertex_coords(in.b, members));
    }
    t.check(seen_p.size() == nested.size(), [&] { return in.name + ": repeated nestohedron coordinates"; });
  }
  std::string detail = t.failure;
  if (!detail.empty())
    detail += "; closed-form formula collides on " + std::to_string(colliding) + " of " + std::to_string(family) +
              " instances, Minkowski vertices on " + std::to_string(minkowski_colliding);
  return {7, "vertex coordinates", t.failure.empty(), t.checked, detail, 0};
}

CriterionResult stellar(const VerifyOptions& opt) {
  Tally t;
  auto run = [&](const std::string& name, const BuildingSet& b) {
    StellarResult r = stellar_realization(b);
    t.check(r.complex.same_facets(extended_nested_complex(b)), [&] { return name + ": facet sets differ"; });
  };
  StellarResult ex = stellar_realization(example_polytopality());
  t.check(ex.steps.size() == 2 && ex.steps[0].subdivided == S({1, 2, 3}) && ex.steps[1].subdivided == S({1, 2}),
          [] { return std::string("example subdivision sequence"); });
  run("example", example_polytopality());
  for (const auto& in : graphical_family(capped(opt, 4), capped(opt, 4))) run(in.name, in.b);
  return {8, "stellar realization", t.failure.empty(), t.checked, t.failure, 0};
}

CriterionResult shelling(const VerifyOptions& opt) {
  Tally t;
  std::mt19937_64 rng(opt.seed);
  for (int n = 1; n <= capped(opt, 4); ++n) {
    BuildingSet b = from_graph(complete_graph(n));
    SimplicialComplex c = extended_nested_complex(b);
    std::vector<Word> words;
    Poset p = partial_weak_order(n, nullptr, &words);
    std::map<std::vector<Vertex>, int> index;
    auto labeled = c.labeled_facets();
    for (int k = 0; k < static_cast<int>(labeled.size()); ++k) index[labeled[k]] = k;
    for (int s = 0; s < opt.shelling_samples; ++s) {
      std::vector<int> ext = random_linear_extension(p, rng);
      std::vector<int> order;
      for (int e : ext) {
        auto verts = facet_of_partial_permutation(b, words[e]).vertices();
        std::sort(verts.begin(), verts.end());
        order.push_back(index.at(verts));
      }
      ShellingReport r = verify_shelling(c, order);
      t.check(r.ok, [&] { return "K" + std::to_string(n) + " sample " + std::to_string(s) + " fails at " + std::to_string(r.j); });
    }
  }
  // Pentagon: two disjoint edges first cannot start a shelling.
  SimplicialComplex pent = extended_nested_complex(from_graph(complete_graph(2)));
  std::vector<int> bad{0};
  for (int k = 1; k < static_cast<int>(pent.num_facets()); ++k) {
    const auto& f0 = pent.facets()[0];
    const auto& fk = pent.facets()[k];
    if (std::none_of(fk.begin(), fk.end(), [&](int v) { return std::find(f0.begin(), f0.end(), v) != f0.end(); })) {
      bad.push_back(k);
      break;
    }
  }
  for (int k = 1; k < static_cast<int>(pent.num_facets()); ++k)
    if (std::find(bad.begin(), bad.end(), k) == bad.end()) bad.push_back(k);
  ShellingReport r = verify_shelling(pent, bad);
  t.check(!r.ok && r.j == 1, [] { return std::string("bad pentagon order was accepted"); });
  return {9, "shelling", t.failure.empty(), t.checked, t.failure, 0};
}

CriterionResult lattice(const VerifyOptions& opt) {
  Tally t;
  for (int n = 1; n <= capped(opt, 5); ++n) {
    Poset p = partial_weak_order(n);
    LatticeReport r = lattice_check(p);
    t.check(r.is_lattice, [&] { return "n=" + std::to_string(n) + ": " + p.labels()[r.x] + ", " + p.labels()[r.y]; });
    if (n > capped(opt, 4)) continue;
    for (int u = 0; u < p.size(); ++u) {
      auto row = moebius_row(p, u);
      for (int v = 0; v < p.size(); ++v) {
        if (!p.leq(u, v)) continue;
        t.check(row[v] >= -1 && row[v] <= 1, [&] {
          return "mu(" + p.labels()[u] + "," + p.labels()[v] + ") = " + std::to_string(row[v]);
        });
      }
    }
  }
  return {10, "lattice and Moebius values", t.failure.empty(), t.checked, t.failure, 0};
}

CriterionResult isomorphisms(const VerifyOptions& opt) {
  Tally t;
  auto ok = [](const IsoConstruction& r) { return r.map_verified && r.isomorphic; };
  const int top = capped(opt, 5);
  for (int n = 1; n <= top; ++n) {
    BuildingSet p = from_graph(path_graph(n));
    IsoConstruction e = interval_extension(p);
    t.check(ok(e) && e.target == from_graph(path_graph(n + 1)), [&] { return "interval extension P" + std::to_string(n); });
    t.check(ok(interval_rotation(p)), [&] { return "rotation P" + std::to_string(n); });
    t.check(ok(extended_interval_rotation(p)), [&] { return "extended rotation P" + std::to_string(n); });
    t.check(ok(flip(p)), [&] { return "flip P" + std::to_string(n); });
  }
  BuildingSet ex = example_polytopality();
  t.check(ok(interval_extension(ex)), [] { return std::string("interval extension of the example"); });
  t.check(ok(interval_rotation(ex)), [] { return std::string("rotation of the example"); });
  t.check(ok(flip(ex)), [] { return std::string("flip of the example"); });
  for (const auto& in : graphical_family(capped(opt, 4), 0)) t.check(ok(flip(in.b)), [&] { return "flip " + in.name; });

  BuildingSet one = BuildingSet::validate(std::vector<Subset>{S({1})}, 1);
  auto spider_ok = [](const SpiderOctopus& r) { return r.map_verified && r.isomorphic && r.suction_cup_violation.empty(); };
  for (int l = 1; l <= capped(opt, 4); ++l) {
    SpiderOctopus r = spider_to_octopus(SpiderSpec::from_legs(std::vector<BuildingSet>(l, one)));
    t.check(spider_ok(r) && canonical_form(r.octopus.b) == canonical_form(from_graph(star_graph(l))),
            [&] { return "complete body K" + std::to_string(l); });
  }
  for (int k = 1; k <= top; ++k) {
    SpiderOctopus r = spider_to_octopus(SpiderSpec::from_legs({from_graph(path_graph(k))}));
    t.check(spider_ok(r) && canonical_form(r.octopus.b) == canonical_form(from_graph(path_graph(k + 1))),
            [&] { return "single leg P" + std::to_string(k); });
  }
  BuildingSet two = BuildingSet::validate(std::vector<Subset>{S({1}), S({2}), S({1, 2})}, 2);
  SpiderOctopus three = spider_to_octopus(SpiderSpec::from_legs({ex, two, one}));
  t.check(spider_ok(three) && three.octopus.leg_sets.size() == 3 && three.octopus.suction_cup_sets.size() == 6 &&
              three.octopus.body_sets.size() == 24,
          [] { return std::string("three-leg spider"); });

  SimplicialComplex src = extended_nested_complex(ex);
  SimplicialComplex tgt = nested_complex(remark_target());
  VertexMap m = remark_map();
  t.check(check_map(src, tgt, m) && m.at(Vertex::member(S({1, 2, 3})).label()).set.size() == 2,
          [] { return std::string("remark map"); });
  IsoConstruction ext = interval_extension(ex);
  VertexMap composite = compose(inverse(m), ext.map);
  t.check(check_map(tgt, nested_complex(ext.target), composite), [] { return std::string("remark composite"); });
  return {11, "isomorphism constructions", t.failure.empty(), t.checked, t.failure, 0};
}

CriterionResult forests(const VerifyOptions& opt) {
  Tally t;
  for (const auto& [v, edges] : forests_up_to(capped(opt, 6))) {
    ForestLineGraphResult r = forest_linegraph_equal(v, edges);
    t.check(r.equal, [&, v = v] {
      return "forest on " + std::to_string(v) + " vertices: " + r.forest_side.str() + " vs " + r.line_graph_side.str();
    });
  }
  return {12, "forest and line graph f-polynomials", t.failure.empty(), t.checked, t.failure, 0};
}

CriterionResult ab_numbers(const VerifyOptions& opt) {
  Tally t;
  for (const auto& in : base_family(opt)) {
    IdentityReport r = ab_identities_check(in.b);
    t.check(r.ok, [&] { return in.name + ": " + r.first_failure()->name + " " + r.first_failure()->detail; });
  }
  return {13, "a- and b-numbers", t.failure.empty(), t.checked, t.failure, 0};
}

CriterionResult flip_posets(const VerifyOptions& opt) {
  Tally t;
  for (const auto& in : graphical_family(capped(opt, 4), capped(opt, 4)))
    for (bool extended : {false, true})
      t.check(flip_poset(in.b, extended).acyclic, [&] { return in.name + (extended ? " extended" : "") + ": cycle"; });
  std::string plain;
  for (int n = 1; n <= capped(opt, 4); ++n) {
    FlipPoset fp = flip_poset(from_graph(complete_graph(n)), true);
    Poset pw = partial_weak_order(n);
    bool dual = find_poset_isomorphism(fp.poset.dual(), pw).has_value();
    if (!dual && find_poset_isomorphism(fp.poset, pw)) plain += (plain.empty() ? "" : ",") + std::to_string(n);
    t.check(dual, [&] { return "K" + std::to_string(n) + ": extended flip poset is not dual to the partial weak order"; });
  }
  std::string detail = t.failure;
  if (!plain.empty()) detail += "; isomorphic without dualizing for n in {" + plain + "}";
  return {14, "flip posets", t.failure.empty(), t.checked, detail, 0};
}

}  // namespace

BuildingSet example_polytopality() {
  return BuildingSet::validate(std::vector<Subset>{S({1}), S({2}), S({3}), S({1, 2}), S({1, 2, 3})}, 3);
}

BuildingSet remark_target() {
  return BuildingSet::validate(
      std::vector<Subset>{S({1}), S({2}), S({3}), S({4}), S({1, 3}), S({3, 4}), S({1, 3, 4}), S({2, 3, 4}), S({1, 2, 3, 4})}, 4);
}

VertexMap remark_map() {
  auto mem = [](Subset s) { return Vertex::member(s); };
  return {
      {Vertex::design(1).label(), mem(S({2, 3, 4}))}, {Vertex::design(2).label(), mem(S({3, 4}))},
      {Vertex::design(3).label(), mem(S({4}))},       {mem(S({1})).label(), mem(S({1, 3, 4}))},
      {mem(S({2})).label(), mem(S({2}))},             {mem(S({3})).label(), mem(S({3}))},
      {mem(S({1, 2})).label(), mem(S({1}))},          {mem(S({1, 2, 3})).label(), mem(S({1, 3}))},
  };
}

std::vector<Instance> base_family(const VerifyOptions& opt) {
  const int top = capped(opt, 5);
  std::vector<Instance> out = graphical_family(top, top);
  auto random = random_family(opt.random_count, top, opt.seed);
  out.insert(out.end(), random.begin(), random.end());
  return out;
}

CriterionResult verify_criterion(int id, const VerifyOptions& opt) {
  using Fn = CriterionResult (*)(const VerifyOptions&);
  static constexpr Fn table[kCriteria] = {purity,      recursions, dehn_sommerville, gal,     chordal,
                                          bijections,  coordinates, stellar,         shelling, lattice,
                                          isomorphisms, forests,   ab_numbers,       flip_posets};
  if (id < 1 || id > kCriteria) throw Error(ErrorCode::InvalidArgument, "criterion id out of range");
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = table[id - 1](opt);
  } catch (const Error& e) {
    r = {id, "criterion " + std::to_string(id), false, 0, e.what(), 0};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> verify_all(const VerifyOptions& opt) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriteria; ++id) out.push_back(verify_criterion(id, opt));
  return out;
}

}  // namespace nesto
