#include <doctest.h>

#include <numeric>
#include <set>

#include "fixtures.hpp"
#include "nesto/complex.hpp"
#include "nesto/error.hpp"
#include "nesto/geom.hpp"
#include "nesto/orders.hpp"

using namespace nesto;
using fx::S;

TEST_CASE("stellar subdivision of the cross-polytope") {
  StellarResult r = stellar_realization(fx::stacked());
  REQUIRE(r.steps.size() == 2);
  CHECK(r.steps[0].subdivided == S({1, 2, 3}));
  CHECK(r.steps[1].subdivided == S({1, 2}));
  CHECK(r.steps[0].facets_before == 8);
  CHECK(r.complex.same_facets(extended_nested_complex(fx::stacked())));

  StellarResult cross = stellar_realization(fx::bs(3, {{1}, {2}, {3}}));
  CHECK(cross.steps.empty());
  CHECK(cross.complex.num_facets() == 8);

  for (const auto& in : graphical_family(4, 4))
    CHECK_MESSAGE(stellar_realization(in.b).complex.same_facets(extended_nested_complex(in.b)), in.name);
}

TEST_CASE("stellar subdivision of a triangle edge") {
  std::vector<std::vector<Vertex>> tri{{Vertex::plain(1), Vertex::plain(2)}, {Vertex::plain(2), Vertex::plain(3)},
                                       {Vertex::plain(1), Vertex::plain(3)}};
  SimplicialComplex c = SimplicialComplex::from_facets(tri);
  SimplicialComplex s = stellar_subdivide(c, {Vertex::plain(1), Vertex::plain(2)}, Vertex::plain(4));
  CHECK(s.num_facets() == 4);
  CHECK_THROWS_AS(stellar_subdivide(c, {Vertex::plain(1), Vertex::plain(5)}, Vertex::plain(6)), Error);
}

TEST_CASE("vertex coordinates of the worked examples") {
  BuildingSet k3 = fx::K(3);
  CHECK(extended_vertex_coords(k3, {{S({2}), S({2, 3})}, {1}}) == Coords{0, 4, 3});
  CHECK(extended_vertex_coords(k3, {{S({3}), S({1, 3}), S({1, 2, 3})}, {}}) == Coords{3, 2, 4});
  CHECK(minkowski_vertex_coords(k3, {{S({3}), S({1, 3}), S({1, 2, 3})}, {}}) == Coords{3, 1, 4});
  CHECK(nestohedron_vertex_coords(k3, {S({1}), S({1, 2})}) == Coords{1, 2, 4});
  CHECK_THROWS_AS(extended_vertex_coords(k3, {{S({2})}, {1}}), Error);
}

TEST_CASE("coordinates vanish exactly on designs") {
  for (const auto& in : graphical_family(4, 3)) {
    const bool undirected = in.name[0] == 'G';
    for (const auto& f : extended_facets(in.b)) {
      Coords v = extended_vertex_coords(in.b, f);
      Coords m = minkowski_vertex_coords(in.b, f);
      for (int k = 1; k <= in.b.n(); ++k) {
        bool design = std::count(f.designs.begin(), f.designs.end(), k) > 0;
        if (undirected) CHECK((v[k - 1] == 0) == design);
        CHECK((m[k - 1] == 0) == design);
        CHECK(v[k - 1] >= 0);
      }
    }
  }
  // members through 1: {1} and {1,2,3}; the facet {{1,2,3}, x_2, ...} is impossible,
  // but {{2},{3},{1,2,3}} leaves 1 at 2 - 3 + 1 = 0
  BuildingSet cyc = fx::bs(3, {{1}, {2}, {3}, {1, 2, 3}});
  CHECK(extended_vertex_coords(cyc, {{S({2}), S({3}), S({1, 2, 3})}, {}})[0] == 0);
}

TEST_CASE("coordinates on undirected graphs are distinct") {
  for (const auto& in : graphical_family(4, 0)) {
    std::set<Coords> seen, mink;
    auto facets = extended_facets(in.b);
    for (const auto& f : facets) {
      seen.insert(extended_vertex_coords(in.b, f));
      mink.insert(minkowski_vertex_coords(in.b, f));
    }
    CHECK_MESSAGE(seen.size() == facets.size(), in.name);
    CHECK_MESSAGE(mink.size() == facets.size(), in.name);
  }
}

TEST_CASE("closed-form coordinates collide on the directed triangle") {
  BuildingSet cyc = fx::bs(3, {{1}, {2}, {3}, {1, 2, 3}});
  std::set<Coords> seen, mink;
  auto facets = extended_facets(cyc);
  for (const auto& f : facets) {
    seen.insert(extended_vertex_coords(cyc, f));
    mink.insert(minkowski_vertex_coords(cyc, f));
  }
  CHECK(seen.size() < facets.size());
  CHECK(mink.size() == facets.size());
}

TEST_CASE("permutohedron coordinates have constant sum") {
  for (int n = 1; n <= 4; ++n) {
    BuildingSet k = fx::K(n);
    std::set<std::int64_t> sums;
    for (const auto& labeled : nested_complex(k).labeled_facets()) {
      std::vector<Subset> f;
      for (const auto& v : labeled) f.push_back(v.set);
      Coords v = nestohedron_vertex_coords(k, f);
      sums.insert(std::accumulate(v.begin(), v.end(), std::int64_t{0}));
    }
    CHECK(sums.size() == 1);
  }
}

TEST_CASE("cost orientations") {
  Orientation pent = cost_orientation(fx::K(2), {-2, -1}, true);
  CHECK(pent.acyclic);
  CHECK(pent.edges.size() == 5);
  std::vector<int> outdeg(5, 0), indeg(5, 0);
  for (auto [a, b] : pent.edges) {
    ++outdeg[a];
    ++indeg[b];
  }
  CHECK(std::count(indeg.begin(), indeg.end(), 0) == 1);
  CHECK(std::count(outdeg.begin(), outdeg.end(), 0) == 1);

  Orientation hex = cost_orientation(fx::K(3), {3, 2, 1}, false);
  CHECK(hex.acyclic);
  CHECK(hex.edges.size() == 6);
  CHECK_THROWS_AS(cost_orientation(fx::K(3), {1, 1, 1}, false), Error);

  for (int n = 1; n <= 4; ++n)
    for (bool ext : {false, true}) {
      Orientation o = cost_orientation(fx::K(n), default_cost(n, ext), ext);
      FlipPoset fp = flip_poset(fx::K(n), ext);
      std::set<std::pair<int, int>> a(o.edges.begin(), o.edges.end()), b(fp.flips.begin(), fp.flips.end());
      CHECK(a == b);
    }
}
