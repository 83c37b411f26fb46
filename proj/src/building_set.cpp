#include "nesto/building_set.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "nesto/error.hpp"

namespace nesto {

DirectedGraph DirectedGraph::undirected(int n, const std::vector<std::pair<int, int>>& edges) {
  DirectedGraph g{n, {}};
  for (auto [u, v] : edges) {
    g.arcs.emplace_back(u, v);
    g.arcs.emplace_back(v, u);
  }
  std::sort(g.arcs.begin(), g.arcs.end());
  g.arcs.erase(std::unique(g.arcs.begin(), g.arcs.end()), g.arcs.end());
  return g;
}

bool DirectedGraph::has_arc(int u, int v) const {
  return std::find(arcs.begin(), arcs.end(), std::pair{u, v}) != arcs.end();
}

void DirectedGraph::validate() const {
  if (n < 0 || n > kHardMaxN) throw Error(ErrorCode::InvalidArgument, "node count out of range");
  auto sorted = arcs;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    auto [u, v] = sorted[k];
    if (u < 1 || u > n || v < 1 || v > n)
      throw Error(ErrorCode::InvalidArgument, "arc endpoint outside 1.." + std::to_string(n));
    if (u == v) throw Error(ErrorCode::InvalidArgument, "loop at " + std::to_string(u));
    if (k > 0 && sorted[k - 1] == sorted[k])
      throw Error(ErrorCode::InvalidArgument, "duplicate arc " + std::to_string(u) + "->" + std::to_string(v));
  }
}

namespace {

std::vector<Subset> canonicalize(std::vector<Subset> sets) {
  std::sort(sets.begin(), sets.end(), CanonicalLess{});
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

void check_ground(int n) {
  if (n < 0 || n > kHardMaxN)
    throw Error(ErrorCode::GroundTooLarge, "ground size " + std::to_string(n) + " outside 0.." + std::to_string(kHardMaxN));
}

}  // namespace

BuildingSet BuildingSet::trusted(int n, Subset ground, std::vector<Subset> sets) {
  BuildingSet b;
  b.n_ = n;
  b.ground_ = ground;
  b.sets_ = canonicalize(std::move(sets));
  b.lookup_.reserve(b.sets_.size());
  for (Subset s : b.sets_) b.lookup_.push_back(s.bits());
  std::sort(b.lookup_.begin(), b.lookup_.end());
  return b;
}

bool BuildingSet::contains(Subset s) const {
  return std::binary_search(lookup_.begin(), lookup_.end(), s.bits());
}

BuildingSet BuildingSet::validate(std::span<const Subset> sets, int n) {
  check_ground(n);
  Subset ground = Subset::full(n);
  for (Subset s : sets) {
    if (s.empty()) throw Error(ErrorCode::InvalidArgument, "empty set in family");
    if (!s.subset_of(ground)) throw Error(ErrorCode::InvalidArgument, s.str() + " not inside [" + std::to_string(n) + "]");
  }
  BuildingSet b = trusted(n, ground, std::vector<Subset>(sets.begin(), sets.end()));
  for (int i = 1; i <= n; ++i)
    if (!b.contains(Subset::singleton(i)))
      throw Error(ErrorCode::MissingSingleton, "{" + std::to_string(i) + "}");
  const auto& v = b.sets_;
  for (std::size_t x = 0; x < v.size(); ++x)
    for (std::size_t y = x + 1; y < v.size(); ++y)
      if (v[x].intersects(v[y]) && !b.contains(v[x] | v[y]))
        throw Error(ErrorCode::UnionClosureViolation, v[x].str() + "," + v[y].str());
  return b;
}

BuildingSet BuildingSet::closure(std::span<const Subset> sets, Subset ground, int n) {
  check_ground(n);
  if (!ground.subset_of(Subset::full(n))) throw Error(ErrorCode::InvalidArgument, "ground outside [n]");
  std::vector<Subset> cur;
  for (int i : ground.elements()) cur.push_back(Subset::singleton(i));
  for (Subset s : sets) {
    if (s.empty() || !s.subset_of(ground)) throw Error(ErrorCode::InvalidArgument, s.str() + " not inside ground");
    cur.push_back(s);
  }
  cur = canonicalize(std::move(cur));
  bool changed = true;
  while (changed) {
    changed = false;
    BuildingSet probe = trusted(n, ground, cur);
    std::vector<Subset> add;
    for (std::size_t x = 0; x < cur.size(); ++x)
      for (std::size_t y = x + 1; y < cur.size(); ++y)
        if (cur[x].intersects(cur[y]) && !probe.contains(cur[x] | cur[y])) add.push_back(cur[x] | cur[y]);
    if (!add.empty()) {
      changed = true;
      cur.insert(cur.end(), add.begin(), add.end());
      cur = canonicalize(std::move(cur));
    }
  }
  return trusted(n, ground, std::move(cur));
}

namespace {

// Strong connectivity of the subgraph induced on `s` given out/in adjacency masks.
bool strongly_connected(Subset s, const std::array<Mask, 32>& out, const std::array<Mask, 32>& in) {
  if (s.empty()) return false;
  auto reach = [&](const std::array<Mask, 32>& adj) {
    Mask seen = Mask{1} << (s.min() - 1);
    Mask frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f) + 1];
      next &= s.bits() & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == s.bits();
  };
  return reach(out) && reach(in);
}

}  // namespace

BuildingSet from_graph(const DirectedGraph& g) {
  g.validate();
  std::array<Mask, 32> out{}, in{};
  for (auto [u, v] : g.arcs) {
    out[u] |= Mask{1} << (v - 1);
    in[v] |= Mask{1} << (u - 1);
  }
  std::vector<Subset> sets;
  Mask full = Subset::full(g.n).bits();
  for (Mask m = 1; m && m <= full; ++m)
    if (strongly_connected(Subset(m), out, in)) sets.push_back(Subset(m));
  return BuildingSet::trusted(g.n, Subset::full(g.n), std::move(sets));
}

std::optional<DirectedGraph> graphical_witness(const BuildingSet& b) {
  constexpr int kSearchBound = 8;
  if (b.rank() > kSearchBound)
    throw Error(ErrorCode::GroundTooLarge, "graphical search limited to " + std::to_string(kSearchBound) + " elements");
  std::vector<int> elems = b.ground().elements();
  const int k = static_cast<int>(elems.size());
  // Pair status: 0 no arcs allowed, 1 forced both ways, 2 free choice.
  auto status = [&](int a, int c) {
    Subset p = Subset::singleton(a) | Subset::singleton(c);
    if (b.contains(p)) return 1;
    for (Subset s : b.sets())
      if (p.subset_of(s)) return 2;
    return 0;
  };
  std::array<Mask, 32> out{}, in{};
  auto set_arc = [&](int u, int v, bool on) {
    Mask bu = Mask{1} << (u - 1), bv = Mask{1} << (v - 1);
    if (on) {
      out[u] |= bv;
      in[v] |= bu;
    } else {
      out[u] &= ~bv;
      in[v] &= ~bu;
    }
  };
  // After every pair among elems[0..j] is fixed, all subsets containing
  // elems[j] inside that prefix are decided.
  auto prefix_ok = [&](int j) {
    Subset prefix;
    for (int x = 0; x < j; ++x) prefix = prefix.with(elems[x]);
    bool ok = true;
    for_each_submask(prefix, [&](Subset rest) {
      if (!ok) return;
      Subset s = rest.with(elems[j]);
      if (strongly_connected(s, out, in) != b.contains(s)) ok = false;
    });
    return ok;
  };
  std::function<bool(int, int)> rec = [&](int j, int i) -> bool {
    if (j == k) return true;
    if (i == j) {
      if (!prefix_ok(j)) return false;
      return rec(j + 1, 0);
    }
    int u = elems[i], v = elems[j];
    switch (status(u, v)) {
      case 0:
        return rec(j, i + 1);
      case 1: {
        set_arc(u, v, true);
        set_arc(v, u, true);
        if (rec(j, i + 1)) return true;
        set_arc(u, v, false);
        set_arc(v, u, false);
        return false;
      }
      default: {
        if (rec(j, i + 1)) return true;
        set_arc(u, v, true);
        if (rec(j, i + 1)) return true;
        set_arc(u, v, false);
        set_arc(v, u, true);
        if (rec(j, i + 1)) return true;
        set_arc(v, u, false);
        return false;
      }
    }
  };
  if (!rec(0, 0)) return std::nullopt;
  DirectedGraph g{b.n(), {}};
  for (int u = 1; u <= b.n(); ++u)
    for (Mask m = out[u]; m; m &= m - 1) g.arcs.emplace_back(u, std::countr_zero(m) + 1);
  return g;
}

bool is_graphical(const BuildingSet& b) { return graphical_witness(b).has_value(); }

BuildingSet restriction(const BuildingSet& b, Subset s) {
  Subset ground = b.ground() & s;
  std::vector<Subset> sets;
  for (Subset j : b.sets())
    if (j.subset_of(ground)) sets.push_back(j);
  return BuildingSet::trusted(b.n(), ground, std::move(sets));
}

BuildingSet contraction(const BuildingSet& b, Subset i) {
  Subset ground = b.ground() - i;
  std::vector<Subset> sets;
  for (Subset j : b.sets())
    if (!j.subset_of(i)) sets.push_back(j - i);
  return BuildingSet::trusted(b.n(), ground, std::move(sets));
}

std::vector<Subset> maximal_elements(const BuildingSet& b, Subset s) {
  std::vector<Subset> out;
  const auto& v = b.sets();
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    if (!it->subset_of(s)) continue;
    bool covered = false;
    for (Subset m : out)
      if (it->subset_of(m)) {
        covered = true;
        break;
      }
    if (!covered) out.push_back(*it);
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::vector<Subset> maximal_elements(const BuildingSet& b) { return maximal_elements(b, b.ground()); }

std::vector<BuildingSet> connected_components(const BuildingSet& b) {
  std::vector<BuildingSet> out;
  for (Subset m : maximal_elements(b)) out.push_back(restriction(b, m));
  return out;
}

bool is_connected(const BuildingSet& b) { return !b.empty() && b.contains(b.ground()); }

bool is_chordal(const BuildingSet& b) {
  for (Subset s : b.sets()) {
    Subset suffix = s;
    while (suffix.size() > 1) {
      suffix = suffix.without(suffix.min());
      if (!b.contains(suffix)) return false;
    }
  }
  return true;
}

bool is_flag(const BuildingSet& b) {
  for (Subset s : b.sets()) {
    if (s.size() < 2) continue;
    bool split = false;
    for (Subset part : b.sets()) {
      if (part.size() >= s.size()) break;
      if (part.subset_of(s) && b.contains(s - part)) {
        split = true;
        break;
      }
    }
    if (!split) return false;
  }
  return true;
}

int count_containing(const BuildingSet& b, int i) {
  int c = 0;
  for (Subset s : b.sets())
    if (s.contains(i)) ++c;
  return c;
}

std::vector<Mask> canonical_key(const BuildingSet& b) {
  std::vector<Mask> key;
  key.reserve(b.size() + 1);
  key.push_back(b.ground().bits());
  for (Subset s : b.sets()) key.push_back(s.bits());
  return key;
}

}  // namespace nesto
