#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "nesto/complex.hpp"
#include "nesto/error.hpp"
#include "nesto/orders.hpp"

using namespace nesto;
using fx::S;

namespace {

int find_word(const std::vector<Word>& words, const Word& w) {
  return static_cast<int>(std::find(words.begin(), words.end(), w) - words.begin());
}

// Facet indices of c in the order given by a list of facets.
std::vector<int> facet_order(const SimplicialComplex& c, const std::vector<ExtendedFace>& faces) {
  std::vector<int> order;
  for (const auto& f : faces) {
    Face idx;
    for (const auto& v : f.vertices()) idx.push_back(*c.index_of(v));
    std::sort(idx.begin(), idx.end());
    order.push_back(static_cast<int>(std::find(c.facets().begin(), c.facets().end(), idx) - c.facets().begin()));
  }
  return order;
}

}  // namespace

TEST_CASE("partial weak order on two letters") {
  std::vector<Word> words;
  Poset p = partial_weak_order(2, nullptr, &words);
  REQUIRE(p.size() == 5);
  const int id = find_word(words, {1, 2}), sw = find_word(words, {2, 1}), two = find_word(words, {2}),
            one = find_word(words, {1}), none = find_word(words, {});
  CHECK(p.minimal() == std::vector<int>{id});
  CHECK(p.maximal() == std::vector<int>{none});
  std::set<std::pair<int, int>> covers(p.covers().begin(), p.covers().end());
  CHECK(covers == std::set<std::pair<int, int>>{{id, sw}, {sw, two}, {two, none}, {id, one}, {one, none}});
  CHECK(partial_weak_order(3).size() == 16);
}

TEST_CASE("weak order matches inversion containment") {
  std::vector<Word> perms;
  Poset w = weak_order(4, &perms);
  CHECK(w.size() == 24);
  CHECK(w.minimal().size() == 1);
  CHECK(perms[w.minimal()[0]] == Word{1, 2, 3, 4});
  for (int x = 0; x < w.size(); ++x)
    for (int y = 0; y < w.size(); ++y) CHECK(w.leq(x, y) == oracle::weak_leq(perms[x], perms[y]));
  CHECK(w.covers().size() == 36);
}

TEST_CASE("partial weak order agrees with phi images") {
  std::vector<Word> words;
  Poset p = partial_weak_order(3, nullptr, &words);
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      CHECK(p.leq(x, y) == oracle::weak_leq(oracle::phi(words[x], 3), oracle::phi(words[y], 3)));
  CHECK_THROWS_AS(partial_weak_order(9), Error);
}

TEST_CASE("lattice and Moebius values") {
  for (int n = 1; n <= 4; ++n) {
    Poset p = partial_weak_order(n);
    CHECK(lattice_check(p).is_lattice);
    std::vector<std::vector<bool>> leq(p.size(), std::vector<bool>(p.size()));
    for (int x = 0; x < p.size(); ++x)
      for (int y = 0; y < p.size(); ++y) leq[x][y] = p.leq(x, y);
    for (int u = 0; u < p.size(); ++u) {
      auto row = moebius_row(p, u);
      for (int v = 0; v < p.size(); ++v) {
        if (!p.leq(u, v)) continue;
        CHECK(row[v] >= -1);
        CHECK(row[v] <= 1);
        if (n <= 3) CHECK(row[v] == oracle::moebius(leq, u, v));
      }
    }
  }
  Poset chain = Poset::from_relation({"a", "b", "c"}, {{0, 1}, {1, 2}});
  CHECK(lattice_check(chain).is_lattice);
  CHECK(moebius(chain, 0, 2) == 0);
  CHECK(moebius(chain, 0, 1) == -1);
  CHECK_THROWS_AS(moebius(chain, 2, 0), Error);
  Poset vee = Poset::from_relation({"a", "b", "c"}, {{0, 1}, {0, 2}});
  CHECK_FALSE(lattice_check(vee).is_lattice);
  CHECK_FALSE(join(vee, 1, 2).has_value());
  CHECK(meet(vee, 1, 2) == 0);
  CHECK_THROWS_AS(Poset::from_relation({"a", "b"}, {{0, 1}, {1, 0}}), Error);
}

TEST_CASE("flip poset of the hexagon is the weak order") {
  FlipPoset l = flip_poset(fx::K(3), false);
  CHECK(l.facets.size() == 6);
  CHECK(l.acyclic);
  CHECK(find_poset_isomorphism(weak_order(3), l.poset).has_value());
  FlipPoset one = flip_poset(fx::bs(1, {{1}}), false);
  CHECK(one.poset.size() == 1);
}

TEST_CASE("flip posets are acyclic") {
  for (const auto& in : graphical_family(4, 4)) {
    CHECK_MESSAGE(flip_poset(in.b, false).acyclic, in.name);
    CHECK_MESSAGE(flip_poset(in.b, true).acyclic, in.name);
  }
}

TEST_CASE("extended flip poset of the complete graph against the partial weak order") {
  for (int n = 1; n <= 4; ++n) {
    BuildingSet k = fx::K(n);
    FlipPoset l = flip_poset(k, true);
    std::vector<Word> words;
    Poset pw = partial_weak_order(n, nullptr, &words);
    std::vector<int> map;
    for (const auto& w : words) {
      ExtendedFace f = facet_of_partial_permutation(k, w);
      map.push_back(static_cast<int>(std::find(l.facets.begin(), l.facets.end(), f) - l.facets.begin()));
    }
    CHECK(verify_poset_map(pw, l.poset, map));
    if (n >= 2) CHECK_FALSE(verify_poset_map(pw, l.poset.dual(), map));
  }
}

TEST_CASE("covers of the partial weak order flip one element") {
  for (int n = 1; n <= 4; ++n) {
    BuildingSet k = fx::K(n);
    std::vector<Word> words;
    Poset pw = partial_weak_order(n, nullptr, &words);
    for (auto [x, y] : pw.covers()) {
      auto a = facet_of_partial_permutation(k, words[x]).vertices();
      auto b = facet_of_partial_permutation(k, words[y]).vertices();
      int shared = 0;
      for (const auto& v : a) shared += std::count(b.begin(), b.end(), v) > 0;
      CHECK(shared == n - 1);
    }
  }
}

TEST_CASE("facets containing a face form an interval") {
  for (int n = 1; n <= 3; ++n) {
    BuildingSet k = fx::K(n);
    std::vector<Word> words;
    Poset pw = partial_weak_order(n, nullptr, &words);
    std::vector<std::vector<Vertex>> facets;
    for (const auto& w : words) facets.push_back(facet_of_partial_permutation(k, w).vertices());
    SimplicialComplex c = extended_nested_complex(k);
    for (const auto& face : c.all_faces()) {
      std::vector<int> holders;
      auto lab = c.labels(face);
      for (int i = 0; i < pw.size(); ++i) {
        bool all = true;
        for (const auto& v : lab) all = all && std::count(facets[i].begin(), facets[i].end(), v);
        if (all) holders.push_back(i);
      }
      int lo = -1, hi = -1;
      for (int x : holders) {
        bool bottom = true, top = true;
        for (int y : holders) {
          bottom = bottom && pw.leq(x, y);
          top = top && pw.leq(y, x);
        }
        if (bottom) lo = x;
        if (top) hi = x;
      }
      REQUIRE(lo >= 0);
      REQUIRE(hi >= 0);
      int between = 0;
      for (int z = 0; z < pw.size(); ++z) between += pw.leq(lo, z) && pw.leq(z, hi);
      CHECK(between == static_cast<int>(holders.size()));
    }
  }
}

TEST_CASE("shelling") {
  SimplicialComplex pent = extended_nested_complex(fx::K(2));
  std::vector<int> walk{0};
  std::vector<bool> used(5, false);
  used[0] = true;
  while (walk.size() < 5) {
    for (int j = 0; j < 5; ++j) {
      if (used[j]) continue;
      const Face& a = pent.facets()[walk.back()];
      const Face& b = pent.facets()[j];
      if (std::count(b.begin(), b.end(), a[0]) + std::count(b.begin(), b.end(), a[1]) == 1) {
        walk.push_back(j);
        used[j] = true;
        break;
      }
    }
  }
  CHECK(verify_shelling(pent, walk).ok);
  std::vector<int> bad{walk[0], walk[2], walk[1], walk[3], walk[4]};
  ShellingReport r = verify_shelling(pent, bad);
  CHECK_FALSE(r.ok);
  CHECK(r.j == 1);

  std::mt19937_64 rng(7);
  for (int n = 1; n <= 4; ++n) {
    BuildingSet k = fx::K(n);
    std::vector<Word> words;
    Poset pw = partial_weak_order(n, nullptr, &words);
    SimplicialComplex c = extended_nested_complex(k);
    for (int s = 0; s < 5; ++s) {
      auto ext = random_linear_extension(pw, rng);
      CHECK(is_linear_extension(pw, ext));
      std::vector<ExtendedFace> faces;
      for (int e : ext) faces.push_back(facet_of_partial_permutation(k, words[e]));
      CHECK(verify_shelling(c, facet_order(c, faces)).ok);
    }
  }
  SimplicialComplex mixed = SimplicialComplex::from_facets({{Vertex::plain(1), Vertex::plain(2)}, {Vertex::plain(3)}});
  CHECK_THROWS_AS(verify_shelling(mixed, {0, 1}), Error);
}

TEST_CASE("top element") {
  CHECK(top_element({S({1}), S({1, 2})}, S({1, 2, 3})) == 3);
  CHECK(top_element({}, S({2})) == 2);
}
