#include "nesto/instances.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>

#include "nesto/error.hpp"

namespace nesto {

DirectedGraph path_graph(int n) {
  EdgeList e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return DirectedGraph::undirected(n, e);
}

DirectedGraph cycle_graph(int n) {
  if (n < 3) return path_graph(n);
  EdgeList e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(n, 1);
  return DirectedGraph::undirected(n, e);
}

DirectedGraph complete_graph(int n) {
  EdgeList e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return DirectedGraph::undirected(n, e);
}

DirectedGraph star_graph(int n) {
  EdgeList e;
  for (int i = 1; i <= n; ++i) e.emplace_back(i, n + 1);
  return DirectedGraph::undirected(n + 1, e);
}

BuildingSet relabel(const BuildingSet& b, const std::vector<int>& perm) {
  auto img = [&](Subset s) {
    Subset out;
    for (int x : s.elements()) out = out.with(perm.at(x - 1));
    return out;
  };
  std::vector<Subset> sets;
  sets.reserve(b.size());
  for (Subset s : b.sets()) sets.push_back(img(s));
  std::sort(sets.begin(), sets.end(), CanonicalLess{});
  return BuildingSet::trusted(b.n(), img(b.ground()), std::move(sets));
}

namespace {

std::vector<Mask> masks_under(const BuildingSet& b, const std::vector<int>& perm) {
  std::vector<Mask> out;
  out.reserve(b.size());
  for (Subset s : b.sets()) {
    Mask m = 0;
    for (int x : s.elements()) m |= Mask{1} << (perm[x - 1] - 1);
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Mask> canonical_form(const BuildingSet& b) {
  const int n = b.n();
  if (n > 8) throw Error(ErrorCode::SizeCap, "canonical_form needs n <= 8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Mask> best = masks_under(b, perm);
  while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, masks_under(b, perm));
  return best;
}

namespace {

void add_unique(std::vector<Instance>& out, std::set<std::pair<int, std::vector<Mask>>>& seen, std::string name, BuildingSet b) {
  if (seen.emplace(b.n(), canonical_form(b)).second) out.push_back({std::move(name), std::move(b)});
}

std::string edges_name(const char* kind, int n, const std::vector<std::pair<int, int>>& arcs) {
  std::string s = std::string(kind) + std::to_string(n) + "[";
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(arcs[i].first) + "-" + std::to_string(arcs[i].second);
  }
  return s + "]";
}

}  // namespace

namespace {

std::vector<Instance> build_graphical_family(int max_n, int max_directed_n) {
  std::vector<Instance> out;
  std::set<std::pair<int, std::vector<Mask>>> seen;
  for (int n = 1; n <= std::max(max_n, max_directed_n); ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    if (n <= max_n) {
      for (std::uint32_t m = 0; m < (1u << pairs.size()); ++m) {
        EdgeList e;
        for (std::size_t k = 0; k < pairs.size(); ++k)
          if (m >> k & 1) e.push_back(pairs[k]);
        add_unique(out, seen, edges_name("G", n, e), from_graph(DirectedGraph::undirected(n, e)));
      }
    }
    if (n <= max_directed_n) {
      std::vector<std::pair<int, int>> arcs;
      for (auto [i, j] : pairs) {
        arcs.emplace_back(i, j);
        arcs.emplace_back(j, i);
      }
      std::set<std::vector<Mask>> labeled;
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << arcs.size()); ++m) {
        DirectedGraph g{n, {}};
        for (std::size_t k = 0; k < arcs.size(); ++k)
          if (m >> k & 1) g.arcs.push_back(arcs[k]);
        BuildingSet b = from_graph(g);
        if (!labeled.insert(canonical_key(b)).second) continue;
        add_unique(out, seen, edges_name("D", n, g.arcs), std::move(b));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Instance> graphical_family(int max_n, int max_directed_n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<Instance>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(max_n, max_directed_n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_graphical_family(max_n, max_directed_n)).first;
  return it->second;
}

namespace {

BuildingSet random_closure(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Mask> pick(1, (Mask{1} << n) - 1);
  std::uniform_int_distribution<int> count(0, n + 1);
  std::vector<Subset> gens;
  for (int k = count(rng); k > 0; --k) {
    Subset s(pick(rng));
    if (s.size() >= 2) gens.push_back(s);
  }
  return BuildingSet::closure(gens, Subset::full(n), n);
}

}  // namespace

std::vector<Instance> random_family(int count, int max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(1, max_n);
  std::vector<Instance> out;
  for (int k = 0; k < count; ++k) {
    const int n = size(rng);
    out.push_back({"R" + std::to_string(k), random_closure(n, rng)});
  }
  return out;
}

std::vector<Instance> flag_family(int n, int count, std::uint64_t seed) {
  std::vector<Instance> out;
  std::set<std::pair<int, std::vector<Mask>>> seen;
  add_unique(out, seen, "path" + std::to_string(n), from_graph(path_graph(n)));
  add_unique(out, seen, "cycle" + std::to_string(n), from_graph(cycle_graph(n)));
  add_unique(out, seen, "complete" + std::to_string(n), from_graph(complete_graph(n)));
  add_unique(out, seen, "star" + std::to_string(n - 1), from_graph(star_graph(n - 1)));
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  for (int k = 0; k < count; ++k) {
    EdgeList e;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (coin(rng)) e.emplace_back(i, j);
    add_unique(out, seen, edges_name("G", n, e), from_graph(DirectedGraph::undirected(n, e)));
  }
  for (int tries = 0, found = 0; found < count && tries < 50 * count; ++tries) {
    BuildingSet b = random_closure(n, rng);
    if (!is_flag(b)) continue;
    ++found;
    add_unique(out, seen, "F" + std::to_string(tries), std::move(b));
  }
  return out;
}

namespace {

// AHU encoding of the tree containing `root`.
std::string encode(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : adj[v])
    if (w != parent) kids.push_back(encode(adj, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

// Canonical string of an unrooted tree: least encoding over all roots.
std::string tree_code(const EdgeList& edges, int v) {
  std::vector<std::vector<int>> adj(v + 1);
  for (auto [a, c] : edges) {
    adj[a].push_back(c);
    adj[c].push_back(a);
  }
  std::string best;
  for (int r = 1; r <= v; ++r) {
    std::string s = encode(adj, r, 0);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

// Trees with e edges up to isomorphism via Pruefer sequences.
std::vector<EdgeList> trees_with_edges(int e) {
  const int v = e + 1;
  if (v == 2) return {EdgeList{{1, 2}}};
  std::map<std::string, EdgeList> classes;
  std::vector<int> seq(v - 2, 1);
  while (true) {
    std::vector<int> degree(v + 1, 1);
    for (int x : seq) ++degree[x];
    EdgeList edges;
    for (int x : seq) {
      int leaf = 1;
      while (degree[leaf] != 1) ++leaf;
      edges.emplace_back(leaf, x);
      --degree[leaf];
      --degree[x];
    }
    int u = 0, w = 0;
    for (int i = 1; i <= v; ++i)
      if (degree[i] == 1) (u ? w : u) = i;
    edges.emplace_back(u, w);
    classes.emplace(tree_code(edges, v), edges);
    int k = v - 3;
    while (k >= 0 && seq[k] == v) seq[k--] = 1;
    if (k < 0) break;
    ++seq[k];
  }
  std::vector<EdgeList> out;
  for (auto& [code, edges] : classes) out.push_back(std::move(edges));
  return out;
}

}  // namespace

std::vector<std::pair<int, EdgeList>> forests_up_to(int max_edges) {
  std::vector<std::vector<EdgeList>> trees(max_edges + 1);
  for (int e = 1; e <= max_edges; ++e) trees[e] = trees_with_edges(e);
  std::vector<std::pair<int, EdgeList>> out;
  // Multisets of trees as nondecreasing (edges, index) sequences.
  std::vector<std::pair<int, int>> parts;
  std::function<void(int)> grow = [&](int budget) {
    if (!parts.empty()) {
      EdgeList all;
      int offset = 0;
      for (auto [e, idx] : parts) {
        for (auto [a, c] : trees[e][idx]) all.emplace_back(a + offset, c + offset);
        offset += e + 1;
      }
      out.emplace_back(offset, std::move(all));
    }
    for (int e = 1; e <= budget; ++e)
      for (int idx = 0; idx < static_cast<int>(trees[e].size()); ++idx) {
        if (!parts.empty() && std::pair(e, idx) < parts.back()) continue;
        parts.emplace_back(e, idx);
        grow(budget - e);
        parts.pop_back();
      }
  };
  grow(max_edges);
  return out;
}

}  // namespace nesto
