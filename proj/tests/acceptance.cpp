// Acceptance run: each criterion is checked by the library suite and, where
// it is cheap, re-derived from the brute-force oracles. Prints one line per
// criterion. Exit status is nonzero only for failures outside kKnownFailures.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "fixtures.hpp"
#include "nesto/complex.hpp"
#include "nesto/counting.hpp"
#include "nesto/error.hpp"
#include "nesto/geom.hpp"
#include "nesto/iso.hpp"
#include "nesto/orders.hpp"
#include "nesto/perms.hpp"
#include "nesto/verify.hpp"

using namespace nesto;
using fx::S;

namespace {

// Every comparison below is between integers; no slack is allowed.
constexpr std::int64_t kTolerance = 0;
constexpr int kOracleMaxN = 4;

bool within(std::int64_t a, std::int64_t b) { return (a > b ? a - b : b - a) <= kTolerance; }

bool same(const oracle::Poly& a, const oracle::Poly& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!within(a[i], b[i])) return false;
  return true;
}

const std::map<int, const char*> kKnownFailures = {
    {7,
     "the displayed coordinate formula repeats vectors on building sets of digraphs and random "
     "closures, e.g. {{1},{2},{3},{1,2,3}}; it is injective on undirected graphs, and the "
     "Minkowski-sum vertices are injective on the whole family"},
    {14,
     "the explicit labeling carries the partial weak order onto the extended flip poset of K_n "
     "itself; for n >= 3 the flip poset is not isomorphic to the dual of the partial weak order"},
};

struct OracleCheck {
  bool ok = true;
  int checked = 0;
  std::string first;
  void expect(bool cond, const std::string& what) {
    ++checked;
    if (!cond && ok) {
      ok = false;
      first = what;
    }
  }
};

struct Sizes {
  int d_nested;
  oracle::Poly f_p, f_ext, h_p, h_ext;
  std::size_t ext_facets;
  int ext_facet_min, ext_facet_max;
};

Sizes brute(const BuildingSet& b) {
  oracle::Family fam = fx::family(b);
  Sizes s;
  s.d_nested = b.rank() - oracle::count_maxima(fam);
  oracle::Complex nc = oracle::enumerate(b.n(), fam, false);
  oracle::Complex ec = oracle::enumerate(b.n(), fam, true);
  s.f_p = oracle::trim(oracle::polytope_f(nc, s.d_nested));
  s.f_ext = oracle::trim(oracle::polytope_f(ec, b.rank()));
  s.h_p = oracle::h_from_f(s.f_p);
  s.h_ext = oracle::h_from_f(s.f_ext);
  auto facets = oracle::facets(ec);
  s.ext_facets = facets.size();
  s.ext_facet_min = 1 << 20;
  s.ext_facet_max = -1;
  for (const auto& f : facets) {
    s.ext_facet_min = std::min<int>(s.ext_facet_min, static_cast<int>(f.size()));
    s.ext_facet_max = std::max<int>(s.ext_facet_max, static_cast<int>(f.size()));
  }
  return s;
}

std::vector<Instance> oracle_family(std::uint64_t seed) {
  auto fam = graphical_family(kOracleMaxN, kOracleMaxN);
  for (auto& in : random_family(25, kOracleMaxN, seed)) fam.push_back(std::move(in));
  return fam;
}

bool oracle_flag(const oracle::Family& b) {
  for (oracle::Mask m : b) {
    if (std::popcount(m) < 2) continue;
    bool split = false;
    for (oracle::Mask p : b)
      if (p != m && (p & m) == p && oracle::has(b, m & ~p)) split = true;
    if (!split) return false;
  }
  return true;
}

// k-th coordinate of the displayed formula: zero on designs, otherwise the
// number of members through k minus the size of the smallest face member
// through k, plus one.
std::vector<std::int64_t> closed_form_coords(const oracle::Family& b, int n, const oracle::Family& members,
                                         oracle::Mask designs) {
  std::vector<std::int64_t> v(n, 0);
  for (int k = 1; k <= n; ++k) {
    const oracle::Mask bit = oracle::Mask{1} << (k - 1);
    if (designs & bit) continue;
    int through = 0;
    for (oracle::Mask m : b) through += (m & bit) != 0;
    int smallest = 1 << 20;
    for (oracle::Mask m : members)
      if (m & bit) smallest = std::min(smallest, std::popcount(m));
    v[k - 1] = through - smallest + 1;
  }
  return v;
}

// F_i meets F_j inside some F_l, l < j, with |F_l cap F_j| = |F_j| - 1.
bool oracle_shelling(const std::vector<std::set<std::string>>& order) {
  for (std::size_t j = 1; j < order.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      std::set<std::string> ij;
      for (const auto& v : order[i])
        if (order[j].count(v)) ij.insert(v);
      bool found = false;
      for (std::size_t l = 0; l < j && !found; ++l) {
        std::set<std::string> lj;
        for (const auto& v : order[l])
          if (order[j].count(v)) lj.insert(v);
        if (lj.size() + 1 != order[j].size()) continue;
        found = std::includes(lj.begin(), lj.end(), ij.begin(), ij.end());
      }
      if (!found) return false;
    }
  return true;
}

std::set<std::string> labels_of(const std::vector<Vertex>& vs) {
  std::set<std::string> s;
  for (const auto& v : vs) s.insert(v.label());
  return s;
}

OracleCheck oracle_for(int id, const VerifyOptions& opt) {
  OracleCheck c;
  switch (id) {
    case 1:
      for (const auto& in : oracle_family(opt.seed)) {
        Sizes s = brute(in.b);
        c.expect(s.ext_facet_min == in.b.rank() && s.ext_facet_max == in.b.rank(), in.name + " impure");
      }
      break;
    case 2:
      for (const auto& in : oracle_family(opt.seed)) {
        Sizes s = brute(in.b);
        c.expect(same(fx::coeffs(f_nestohedron_recursive(in.b)), s.f_p), in.name + " f_P");
        c.expect(same(fx::coeffs(f_extended_recursive(in.b, 1)), s.f_ext), in.name + " f ext form 1");
        c.expect(same(fx::coeffs(f_extended_recursive(in.b, 2)), s.f_ext), in.name + " f ext form 2");
        c.expect(same(fx::coeffs(h_extended_recursive(in.b)), s.h_ext), in.name + " h ext");
      }
      break;
    case 3:
      for (const auto& in : oracle_family(opt.seed)) {
        Sizes s = brute(in.b);
        auto pal = [](oracle::Poly h, int d) {
          h.resize(d + 1, 0);
          for (int i = 0; i <= d; ++i)
            if (!within(h[i], h[d - i])) return false;
          return true;
        };
        c.expect(pal(s.h_ext, in.b.rank()), in.name + " extended h");
        c.expect(pal(s.h_p, s.d_nested), in.name + " h");
      }
      break;
    case 4:
      for (const auto& in : oracle_family(opt.seed)) {
        if (!oracle_flag(fx::family(in.b))) continue;
        for (auto g : oracle::gamma_from_h(brute(in.b).h_ext, in.b.rank())) c.expect(g >= 0, in.name);
      }
      break;
    case 5: {
      oracle::Family k2 = fx::family(fx::K(2));
      c.expect(same(oracle::descent_h(k2, 2), {1, 3, 1}), "K2 descent h");
      c.expect(same(oracle::descent_gamma(k2, 2), {1, 1}), "K2 descent gamma");
      for (const auto& in : graphical_family(kOracleMaxN, kOracleMaxN)) {
        if (!is_connected(in.b) || !is_chordal(in.b)) continue;
        oracle::Family fam = fx::family(in.b);
        Sizes s = brute(in.b);
        c.expect(same(oracle::descent_h(fam, in.b.n()), s.h_ext), in.name + " h");
        c.expect(same(oracle::descent_gamma(fam, in.b.n()), oracle::gamma_from_h(s.h_ext, in.b.rank())),
                 in.name + " gamma");
      }
      break;
    }
    case 6: {
      auto count = [](const BuildingSet& b) {
        oracle::Family fam = fx::family(b);
        std::size_t k = 0;
        for (const auto& w : oracle::partial_permutations(b.n())) k += oracle::b_partial(fam, w);
        return k;
      };
      c.expect(count(fx::K(2)) == 5, "K2 count");
      for (const auto& in : graphical_family(kOracleMaxN, kOracleMaxN)) {
        if (!is_connected(in.b)) continue;
        c.expect(count(in.b) == brute(in.b).ext_facets, in.name);
      }
      break;
    }
    case 7: {
      oracle::Family k3 = fx::family(fx::K(3));
      c.expect(closed_form_coords(k3, 3, {S({2}).bits(), S({2, 3}).bits()}, S({1}).bits()) ==
                   std::vector<std::int64_t>{0, 4, 3},
               "N1");
      c.expect(closed_form_coords(k3, 3, {S({3}).bits(), S({1, 3}).bits(), S({1, 2, 3}).bits()}, 0) ==
                   std::vector<std::int64_t>{3, 2, 4},
               "N2");
      for (const auto& in : oracle_family(opt.seed)) {
        oracle::Family fam = fx::family(in.b);
        oracle::Complex ec = oracle::enumerate(in.b.n(), fam, true);
        std::set<std::vector<std::int64_t>> seen;
        auto facets = oracle::facets(ec);
        for (const auto& f : facets) {
          oracle::Family members;
          oracle::Mask designs = 0;
          for (int v : f) {
            if (v < static_cast<int>(fam.size())) members.push_back(fam[v]);
            else designs |= oracle::Mask{1} << (v - fam.size());
          }
          seen.insert(closed_form_coords(fam, in.b.n(), members, designs));
        }
        c.expect(seen.size() == facets.size(), in.name + " repeats coordinates");
      }
      break;
    }
    case 8:
      for (const auto& in : graphical_family(3, 3)) {
        oracle::Family fam = fx::family(in.b);
        std::set<std::set<std::string>> want;
        for (const auto& f : oracle::facets(oracle::enumerate(in.b.n(), fam, true))) {
          std::set<std::string> s;
          for (int v : f)
            s.insert(v < static_cast<int>(fam.size()) ? Subset(fam[v]).str()
                                                      : "x_" + std::to_string(v - fam.size() + 1));
          want.insert(s);
        }
        std::set<std::set<std::string>> got;
        for (const auto& f : stellar_realization(in.b).complex.labeled_facets()) got.insert(labels_of(f));
        c.expect(got == want, in.name);
      }
      break;
    case 9: {
      std::mt19937_64 rng(opt.seed);
      for (int n = 1; n <= 3; ++n) {
        BuildingSet k = fx::K(n);
        std::vector<Word> words;
        Poset pw = partial_weak_order(n, nullptr, &words);
        for (int s = 0; s < 5; ++s) {
          std::vector<std::set<std::string>> order;
          for (int e : random_linear_extension(pw, rng))
            order.push_back(labels_of(facet_of_partial_permutation(k, words[e]).vertices()));
          c.expect(oracle_shelling(order), "K" + std::to_string(n));
        }
      }
      std::vector<std::set<std::string>> bad{{"x_1", "x_2"}, {"{1}", "{1,2}"}, {"x_1", "{2}"}};
      c.expect(!oracle_shelling(bad), "bad pentagon order");
      break;
    }
    case 10:
      for (int n = 1; n <= 3; ++n) {
        auto words = oracle::partial_permutations(n);
        const int m = static_cast<int>(words.size());
        std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
        for (int x = 0; x < m; ++x)
          for (int y = 0; y < m; ++y) leq[x][y] = oracle::weak_leq(oracle::phi(words[x], n), oracle::phi(words[y], n));
        for (int x = 0; x < m; ++x)
          for (int y = 0; y < m; ++y) {
            int joins = 0, meets = 0;
            for (int z = 0; z < m; ++z) {
              bool upper = leq[x][z] && leq[y][z], lower = leq[z][x] && leq[z][y];
              bool least = upper, greatest = lower;
              for (int u = 0; u < m && (least || greatest); ++u) {
                if (least && leq[x][u] && leq[y][u] && !leq[z][u]) least = false;
                if (greatest && leq[u][x] && leq[u][y] && !leq[u][z]) greatest = false;
              }
              joins += least;
              meets += greatest;
            }
            c.expect(joins == 1 && meets == 1, "n=" + std::to_string(n));
            if (leq[x][y]) {
              std::int64_t mu = oracle::moebius(leq, x, y);
              c.expect(mu >= -1 && mu <= 1, "mu n=" + std::to_string(n));
            }
          }
      }
      break;
    case 11: {
      BuildingSet src = example_polytopality();
      BuildingSet tgt = remark_target();
      VertexMap map = remark_map();
      std::set<std::set<std::string>> image, want;
      for (const auto& f : extended_nested_complex(src).labeled_facets()) {
        std::set<std::string> s;
        for (const auto& v : f) s.insert(map.at(v.label()).label());
        image.insert(s);
      }
      oracle::Family fam = fx::family(tgt);
      for (const auto& f : oracle::facets(oracle::enumerate(4, fam, false))) {
        std::set<std::string> s;
        for (int v : f) s.insert(Subset(fam[v]).str());
        want.insert(s);
      }
      c.expect(image == want, "counterexample map");
      c.expect(map.at("{1,2,3}").set.size() == 2, "image of [3]");
      for (int n = 1; n <= kOracleMaxN; ++n) {
        oracle::Family ext = fx::family(fx::P(n));
        oracle::Family nxt = fx::family(fx::P(n + 1));
        c.expect(oracle::facets(oracle::enumerate(n, ext, true)).size() ==
                     oracle::facets(oracle::enumerate(n + 1, nxt, false)).size(),
                 "path facet counts n=" + std::to_string(n));
      }
      break;
    }
    case 12:
      for (const auto& [v, edges] : forests_up_to(4)) {
        oracle::Family g = oracle::strongly_connected_subsets(v, [&] {
          std::vector<std::pair<int, int>> arcs;
          for (auto [a, b] : edges) {
            arcs.emplace_back(a, b);
            arcs.emplace_back(b, a);
          }
          return arcs;
        }());
        const int m = static_cast<int>(edges.size());
        std::vector<std::pair<int, int>> line;
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j) {
            auto [a, b] = edges[i];
            auto [x, y] = edges[j];
            if (i != j && (a == x || a == y || b == x || b == y)) line.emplace_back(i + 1, j + 1);
          }
        oracle::Family l = oracle::strongly_connected_subsets(m, line);
        oracle::Poly lhs = oracle::trim(oracle::polytope_f(oracle::enumerate(v, g, false), v - oracle::count_maxima(g)));
        oracle::Poly rhs = oracle::trim(oracle::polytope_f(oracle::enumerate(m, l, true), m));
        c.expect(same(lhs, rhs), std::to_string(m) + " edges");
      }
      break;
    case 13:
      for (const auto& in : oracle_family(opt.seed)) {
        Sizes s = brute(in.b);
        auto at_minus_one = [](const oracle::Poly& p) {
          std::int64_t v = 0, sign = 1;
          for (auto x : p) {
            v += sign * x;
            sign = -sign;
          }
          return v;
        };
        c.expect(within(a_number(in.b), at_minus_one(s.h_ext)), in.name + " a");
        std::int64_t sign = in.b.rank() % 2 ? -1 : 1;
        c.expect(within(b_number(in.b), sign * at_minus_one(s.h_p)), in.name + " b");
      }
      break;
    case 14:
      for (int n = 1; n <= 3; ++n) {
        BuildingSet k = fx::K(n);
        FlipPoset fp = flip_poset(k, true);
        auto words = oracle::partial_permutations(n);
        bool plain = true, dual = true;
        std::vector<int> idx;
        for (const auto& w : words) {
          ExtendedFace f = facet_of_partial_permutation(k, w);
          idx.push_back(static_cast<int>(std::find(fp.facets.begin(), fp.facets.end(), f) - fp.facets.begin()));
        }
        for (std::size_t x = 0; x < words.size(); ++x)
          for (std::size_t y = 0; y < words.size(); ++y) {
            bool o = oracle::weak_leq(oracle::phi(words[x], n), oracle::phi(words[y], n));
            plain = plain && o == fp.poset.leq(idx[x], idx[y]);
            dual = dual && o == fp.poset.leq(idx[y], idx[x]);
          }
        c.expect(fp.acyclic, "K" + std::to_string(n) + " cycle");
        c.expect(dual, "K" + std::to_string(n) + (plain ? " matches the order, not its dual" : " matches neither"));
      }
      break;
    default:
      break;
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance run"};
  VerifyOptions opt;
  app.add_option("--max-n", opt.max_n, "instance size cap")->check(CLI::Range(1, 6));
  app.add_option("--seed", opt.seed, "seed for random families and linear extensions");
  CLI11_PARSE(app, argc, argv);

  int unexpected = 0, failed = 0;
  for (int id = 1; id <= kCriteria; ++id) {
    auto t0 = std::chrono::steady_clock::now();
    CriterionResult r = verify_criterion(id, opt);
    OracleCheck o;
    try {
      o = oracle_for(id, opt);
    } catch (const std::exception& e) {
      o.ok = false;
      o.first = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = r.pass && o.ok;
    std::printf("%s %2d %-28s suite=%d oracle=%d %.2fs\n", pass ? "PASS" : "FAIL", id, r.name.c_str(), r.checked,
                o.checked, secs);
    if (!r.pass) std::printf("     suite: %s\n", r.detail.c_str());
    if (!o.ok) std::printf("     oracle: %s\n", o.first.c_str());
    if (pass) continue;
    ++failed;
    auto known = kKnownFailures.find(id);
    if (known != kKnownFailures.end()) {
      std::printf("     known: %s\n", known->second);
    } else {
      ++unexpected;
    }
  }
  std::printf("%d of %d criteria pass; %d unexpected failure(s)\n", kCriteria - failed, kCriteria, unexpected);
  return unexpected == 0 ? 0 : 1;
}
