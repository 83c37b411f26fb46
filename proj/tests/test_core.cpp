#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "nesto/error.hpp"

using namespace nesto;
using fx::S;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Ok;
}

}  // namespace

TEST_CASE("validate accepts the interval family and a single point") {
  BuildingSet p = fx::bs(4, {{1}, {2}, {3}, {4}, {1, 2}, {2, 3}, {3, 4}, {1, 2, 3}, {2, 3, 4}, {1, 2, 3, 4}});
  CHECK(p.size() == 10);
  CHECK(fx::bs(1, {{1}}).size() == 1);
}

TEST_CASE("validate reports the first violation") {
  CHECK(code_of([] { fx::bs(3, {{1}, {2}, {3}, {1, 2}, {2, 3}}); }) == ErrorCode::UnionClosureViolation);
  try {
    fx::bs(3, {{1}, {2}, {3}, {1, 2}, {2, 3}});
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("{1,2},{2,3}") != std::string::npos);
  }
  CHECK(code_of([] { fx::bs(2, {{1}, {1, 2}}); }) == ErrorCode::MissingSingleton);
  CHECK(code_of([] { fx::bs(2, {{1}, {2}, {3}}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("from_graph on small graphs") {
  CHECK(fx::P(4) == fx::bs(4, {{1}, {2}, {3}, {4}, {1, 2}, {2, 3}, {3, 4}, {1, 2, 3}, {2, 3, 4}, {1, 2, 3, 4}}));
  CHECK(fx::K(3).size() == 7);
  BuildingSet cyc = from_graph(DirectedGraph{3, {{1, 2}, {2, 3}, {3, 1}}});
  CHECK(cyc == fx::bs(3, {{1}, {2}, {3}, {1, 2, 3}}));
}

TEST_CASE("from_graph agrees with the reachability oracle on random digraphs") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 200; ++round) {
    int n = 1 + static_cast<int>(rng() % 5);
    DirectedGraph g{n, {}};
    for (int u = 1; u <= n; ++u)
      for (int v = 1; v <= n; ++v)
        if (u != v && rng() % 3 == 0) g.arcs.emplace_back(u, v);
    BuildingSet b = from_graph(g);
    oracle::Family want = oracle::strongly_connected_subsets(n, g.arcs);
    oracle::Family got = fx::family(b);
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    CHECK(got == want);
    CHECK(oracle::is_building_set(got, n));
  }
}

TEST_CASE("graphical recognition") {
  CHECK_FALSE(is_graphical(fx::not_graphical()));
  CHECK(is_graphical(fx::P(4)));
  auto w = graphical_witness(fx::bs(2, {{1}, {2}, {1, 2}}));
  REQUIRE(w);
  CHECK(from_graph(*w) == fx::bs(2, {{1}, {2}, {1, 2}}));
  for (const auto& in : graphical_family(4, 4)) {
    auto g = graphical_witness(in.b);
    REQUIRE_MESSAGE(g, in.name);
    CHECK(from_graph(*g) == in.b);
  }
}

TEST_CASE("restriction and contraction") {
  BuildingSet p = fx::P(4);
  BuildingSet r = restriction(p, S({1, 2, 4}));
  CHECK(r.sets() == std::vector<Subset>{S({1}), S({2}), S({4}), S({1, 2})});
  BuildingSet c = contraction(p, S({2}));
  CHECK(c.sets() == std::vector<Subset>{S({1}), S({3}), S({4}), S({1, 3}), S({3, 4}), S({1, 3, 4})});
  CHECK(restriction(p, p.ground()) == p);
}

TEST_CASE("restrictions and contractions stay building sets") {
  for (const auto& in : graphical_family(4, 4)) {
    for_each_submask(in.b.ground(), [&](Subset s) {
      auto check = [&](const BuildingSet& x) {
        oracle::Family f;
        for (Subset m : x.sets()) f.push_back(m.bits());
        for (int i : x.ground().elements()) CHECK(oracle::has(f, Subset::singleton(i).bits()));
        CHECK(oracle::is_building_set(f, 0));
      };
      check(restriction(in.b, s));
      check(contraction(in.b, s));
    });
  }
}

TEST_CASE("components and maximal elements") {
  CHECK(maximal_elements(fx::P(4)) == std::vector<Subset>{S({1, 2, 3, 4})});
  BuildingSet r = restriction(fx::P(4), S({1, 2, 4}));
  CHECK(maximal_elements(r) == std::vector<Subset>{S({4}), S({1, 2})});
  CHECK(connected_components(r).size() == 2);
  CHECK(connected_components(fx::bs(3, {{1}, {2}, {3}})).size() == 3);
  CHECK(is_connected(fx::P(4)));
  CHECK_FALSE(is_connected(r));
}

TEST_CASE("chordal and flag predicates") {
  CHECK(is_chordal(fx::K(4)));
  CHECK(is_chordal(fx::P(4)));
  CHECK_FALSE(is_chordal(from_graph(DirectedGraph::undirected(3, {{2, 1}, {1, 3}}))));
  CHECK_FALSE(is_flag(fx::bs(3, {{1}, {2}, {3}, {1, 2, 3}})));
  CHECK(is_flag(fx::not_graphical()));
  for (const auto& in : graphical_family(5, 0)) CHECK_MESSAGE(is_flag(in.b), in.name);
}

TEST_CASE("chordal restrictions stay chordal and chordal implies flag") {
  for (const auto& in : graphical_family(5, 4)) {
    if (!is_chordal(in.b)) continue;
    CHECK(is_flag(in.b));
    for_each_submask(in.b.ground(), [&](Subset s) { CHECK(is_chordal(restriction(in.b, s))); });
  }
}

TEST_CASE("subset canonical order") {
  CHECK(canonical_less(S({3}), S({1, 2})));
  CHECK(canonical_less(S({1, 3}), S({2, 3})));
  CHECK(S({2, 3, 4}).str() == "{2,3,4}");
  CHECK(Subset::interval(2, 4) == S({2, 3, 4}));
  CHECK(S({2, 4}).is_interval() == false);
}
