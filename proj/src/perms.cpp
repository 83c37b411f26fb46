#include "nesto/perms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "nesto/counting.hpp"
#include "nesto/error.hpp"

namespace nesto {

RootedForest RootedForest::empty(int n) {
  RootedForest f;
  f.n = n;
  f.parent.assign(n + 1, 0);
  return f;
}

RootedForest RootedForest::from_parents(int n, Subset nodes, const std::vector<std::pair<int, int>>& child_parent) {
  require_size(n, "forest");
  if (!nodes.subset_of(Subset::full(n))) throw Error(ErrorCode::NotAForest, "nodes outside [n]");
  RootedForest f = empty(n);
  f.nodes = nodes;
  for (auto [c, p] : child_parent) {
    if (c < 1 || p < 1 || c > n || p > n || !nodes.contains(c) || !nodes.contains(p))
      throw Error(ErrorCode::NotAForest, "edge " + std::to_string(c) + "->" + std::to_string(p) + " leaves the node set");
    if (c == p || f.parent[c] != 0)
      throw Error(ErrorCode::NotAForest, "node " + std::to_string(c) + " has more than one parent");
    f.parent[c] = p;
  }
  for (int i : nodes.elements()) {
    int x = i, steps = 0;
    while (f.parent[x] != 0) {
      x = f.parent[x];
      if (++steps > n) throw Error(ErrorCode::NotAForest, "cycle through " + std::to_string(i));
    }
  }
  return f;
}

std::vector<int> RootedForest::roots() const {
  std::vector<int> out;
  for (int i : nodes.elements())
    if (parent[i] == 0) out.push_back(i);
  return out;
}

std::vector<int> RootedForest::children(int i) const {
  std::vector<int> out;
  for (int c : nodes.elements())
    if (parent[c] == i) out.push_back(c);
  return out;
}

Subset RootedForest::descendants(int i) const {
  Subset out;
  for (int c : nodes.elements())
    for (int x = c; x != 0; x = parent[x])
      if (x == i) {
        out = out.with(c);
        break;
      }
  return out;
}

bool RootedForest::comparable(int i, int j) const {
  return descendants(i).contains(j) || descendants(j).contains(i);
}

std::vector<std::pair<int, int>> RootedForest::descents() const {
  std::vector<std::pair<int, int>> out;
  for (int c : nodes.elements())
    if (parent[c] != 0 && c > parent[c]) out.emplace_back(c, parent[c]);
  return out;
}

std::string RootedForest::dot() const {
  std::ostringstream os;
  os << "digraph forest {\n";
  for (int r : roots()) os << "  " << r << " [shape=doublecircle];\n";
  for (int c : nodes.elements())
    if (parent[c] != 0) os << "  " << c << " -> " << parent[c] << ";\n";
  os << "}\n";
  return os.str();
}

void validate_forest(const BuildingSet& b, const RootedForest& f) {
  if (!f.nodes.subset_of(b.ground())) throw Error(ErrorCode::InvalidArgument, "forest nodes outside the ground set");
  const auto nodes = f.nodes.elements();
  std::vector<Subset> desc(f.n + 1);
  for (int i : nodes) {
    desc[i] = f.descendants(i);
    if (!b.contains(desc[i]))
      throw Error(ErrorCode::ForestConditionViolated, "F1: descendants of " + std::to_string(i) + " = " + desc[i].str());
  }
  // F2 over antichains of at least two nodes.
  std::function<void(std::size_t, Subset, int)> rec = [&](std::size_t from, Subset acc, int cnt) {
    if (cnt >= 2 && b.contains(acc))
      throw Error(ErrorCode::ForestConditionViolated, "F2: union " + acc.str() + " is a member");
    for (std::size_t k = from; k < nodes.size(); ++k)
      if (!desc[nodes[k]].intersects(acc)) rec(k + 1, acc | desc[nodes[k]], cnt + 1);
  };
  rec(0, Subset{}, 0);
  std::vector<Subset> tops;
  for (int r : f.roots()) tops.push_back(desc[r]);
  std::sort(tops.begin(), tops.end(), CanonicalLess{});
  auto maxima = maximal_elements(b, f.nodes);
  std::sort(maxima.begin(), maxima.end(), CanonicalLess{});
  if (tops != maxima) throw Error(ErrorCode::ForestConditionViolated, "F3: root sets differ from the maximal elements");
}

bool is_extended_forest(const BuildingSet& b, const RootedForest& f) {
  try {
    validate_forest(b, f);
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ForestConditionViolated || e.code() == ErrorCode::InvalidArgument) return false;
    throw;
  }
}

ExtendedFace forest_to_nested(const BuildingSet& b, const RootedForest& f) {
  validate_forest(b, f);
  ExtendedFace face;
  for (int i : f.nodes.elements()) face.members.push_back(f.descendants(i));
  std::sort(face.members.begin(), face.members.end(), CanonicalLess{});
  face.designs = (b.ground() - f.nodes).elements();
  return face;
}

RootedForest nested_to_forest(const BuildingSet& b, const ExtendedFace& face) {
  if (!is_extended_nested(b, face.members, face.designs))
    throw Error(ErrorCode::NotMaximal, "collection is not extended nested");
  Subset support;
  for (Subset m : face.members) support = support | m;
  if (face.designs != (b.ground() - support).elements() || static_cast<int>(face.members.size()) != support.size())
    throw Error(ErrorCode::NotMaximal, "collection is not a facet");
  RootedForest f = RootedForest::empty(b.n());
  f.nodes = support;
  std::map<Mask, int> node_of;
  for (Subset m : face.members) {
    Subset covered;
    for (Subset c : face.members)
      if (c.proper_subset_of(m)) covered = covered | c;
    Subset top = m - covered;
    if (top.size() != 1) throw Error(ErrorCode::NotMaximal, "member " + m.str() + " has no unique top element");
    node_of[m.bits()] = top.min();
  }
  for (Subset m : face.members) {
    std::optional<Subset> up;
    for (Subset c : face.members)
      if (m.proper_subset_of(c) && (!up || c.size() < up->size())) up = c;
    if (up) f.parent[node_of[m.bits()]] = node_of[up->bits()];
  }
  return f;
}

std::vector<RootedForest> extended_forests(const BuildingSet& b) {
  std::vector<RootedForest> out;
  for (const auto& face : extended_facets(b)) out.push_back(nested_to_forest(b, face));
  return out;
}

RootedForest psi_square(const BuildingSet& b, const Word& w) {
  RootedForest f = RootedForest::empty(b.n());
  for (int x : w) {
    if (!b.ground().contains(x) || f.nodes.contains(x))
      throw Error(ErrorCode::InvalidArgument, "word entries must be distinct ground elements");
    f.nodes = f.nodes.with(x);
  }
  std::function<void(Subset, int)> rec = [&](Subset s, int above) {
    for (Subset comp : maximal_elements(b, s)) {
      int root = 0;
      for (int x : w)
        if (comp.contains(x)) root = x;
      f.parent[root] = above;
      rec(comp.without(root), root);
    }
  };
  rec(f.nodes, 0);
  return f;
}

namespace {

void require_connected_full(const BuildingSet& b) {
  if (b.ground() != Subset::full(b.n()))
    throw Error(ErrorCode::InvalidArgument, "ground set must be [n]");
  if (b.n() > 0 && !is_connected(b)) throw Error(ErrorCode::NotConnected, "building set is disconnected");
}

Subset component_of(const BuildingSet& b, Subset s, int x) {
  for (Subset m : maximal_elements(b, s))
    if (m.contains(x)) return m;
  return Subset{};
}

}  // namespace

bool is_b_partial(const BuildingSet& b, const Word& w) {
  require_connected_full(b);
  Subset prefix;
  int mx = 0;
  for (int x : w) {
    if (!b.ground().contains(x) || prefix.contains(x)) return false;
    prefix = prefix.with(x);
    mx = std::max(mx, x);
    if (!component_of(b, prefix, x).contains(mx)) return false;
  }
  return true;
}

std::vector<Word> b_partial_permutations(const BuildingSet& b) {
  require_connected_full(b);
  require_size(b.n(), "partial permutation enumeration");
  std::vector<Word> out;
  Word tail;
  std::function<void(Subset)> rec = [&](Subset rest) {
    if (rest.empty()) {
      out.emplace_back(tail.rbegin(), tail.rend());
      return;
    }
    for (int x : component_of(b, rest, rest.max()).elements()) {
      tail.push_back(x);
      rec(rest.without(x));
      tail.pop_back();
    }
  };
  for_each_submask(b.ground(), [&](Subset s) { rec(s); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> all_partial_permutations(int n) {
  require_size(n, "partial permutation enumeration");
  std::vector<Word> out;
  for_each_submask(Subset::full(n), [&](Subset s) {
    Word w = s.elements();
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
  });
  std::sort(out.begin(), out.end());
  return out;
}

Word lex_min_extension(const RootedForest& f) {
  RootedForest g = f;
  Word rev;
  while (!g.nodes.empty()) {
    int x = g.nodes.max();
    while (g.parent[x] != 0) x = g.parent[x];
    rev.push_back(x);
    for (int c : g.children(x)) g.parent[c] = 0;
    g.nodes = g.nodes.without(x);
  }
  return {rev.rbegin(), rev.rend()};
}

Word lex_min_extension_greedy(const RootedForest& f) {
  Word out;
  Subset placed;
  while (placed != f.nodes) {
    for (int x : (f.nodes - placed).elements()) {
      bool leaf = true;
      for (int c : f.children(x))
        if (!placed.contains(c)) leaf = false;
      if (leaf) {
        out.push_back(x);
        placed = placed.with(x);
        break;
      }
    }
  }
  return out;
}

Word phi(const Word& w, int n) {
  Subset s;
  for (int x : w) {
    if (x < 1 || x > n || s.contains(x)) throw Error(ErrorCode::InvalidArgument, "not a partial permutation of [n]");
    s = s.with(x);
  }
  Word out = w;
  for (int x = n + 1; x >= 1; --x)
    if (!s.contains(x)) out.push_back(x);
  return out;
}

std::vector<Word> extended_b_permutations(const BuildingSet& b) {
  std::vector<Word> out;
  for (const auto& w : b_partial_permutations(b)) out.push_back(phi(w, b.n()));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_extended_b_permutation(const BuildingSet& b, const Word& w) {
  const int n = b.n();
  if (static_cast<int>(w.size()) != n + 1) return false;
  Word sorted = w;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i <= n; ++i)
    if (sorted[i] != i + 1) return false;
  auto top = std::find(w.begin(), w.end(), n + 1);
  if (!std::is_sorted(top, w.end(), std::greater<>())) return false;
  return is_b_partial(b, Word(w.begin(), top));
}

std::vector<std::pair<int, int>> word_descents(const Word& w) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) out.emplace_back(w[i], w[i + 1]);
  return out;
}

int des(const Word& w) { return static_cast<int>(word_descents(w).size()); }

std::vector<std::pair<int, int>> inversions(const Word& w) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) out.emplace_back(w[i], w[j]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Topo> topography(const Word& w) {
  std::vector<Topo> out;
  const std::size_t m = w.size();
  for (std::size_t i = 0; i < m; ++i) {
    int left = i == 0 ? 0 : w[i - 1];
    int right = i + 1 == m ? 0 : w[i + 1];
    bool up_in = left < w[i], up_out = w[i] < right;
    if (up_in && !up_out) out.push_back(Topo::Peak);
    else if (!up_in && up_out) out.push_back(Topo::Valley);
    else if (up_in) out.push_back(Topo::AscentIntermediary);
    else out.push_back(Topo::DescentIntermediary);
  }
  return out;
}

bool has_final_descent(const Word& w) { return w.size() >= 2 && w[w.size() - 2] > w.back(); }

int double_descents(const Word& w) {
  auto t = topography(w);
  return static_cast<int>(std::count(t.begin(), t.end(), Topo::DescentIntermediary));
}

const char* topo_name(Topo t) {
  switch (t) {
    case Topo::Peak: return "peak";
    case Topo::Valley: return "valley";
    case Topo::AscentIntermediary: return "ascent-intermediary";
    case Topo::DescentIntermediary: return "descent-intermediary";
  }
  return "?";
}

namespace {

std::size_t position(const Word& w, int a) {
  auto it = std::find(w.begin(), w.end(), a);
  if (it == w.end()) throw Error(ErrorCode::InvalidArgument, std::to_string(a) + " is not an entry");
  return static_cast<std::size_t>(it - w.begin());
}

// Gaps of the padded word with a removed that a can sit in; gap g lies
// between p(g) and p(g+1).
std::pair<std::vector<int>, int> slopes(const Word& w, int a) {
  std::size_t i = position(w, a);
  Word p{0};
  for (int x : w)
    if (x != a) p.push_back(x);
  p.push_back(0);
  std::vector<int> gaps;
  int home = -1;
  for (std::size_t g = 0; g + 1 < p.size(); ++g) {
    int lo = std::min(p[g], p[g + 1]), hi = std::max(p[g], p[g + 1]);
    if (lo < a && a < hi) {
      if (g == i) home = static_cast<int>(gaps.size());
      gaps.push_back(static_cast<int>(g));
    }
  }
  return {gaps, home};
}

}  // namespace

bool is_intermediary(const Word& w, int a) {
  auto t = topography(w)[position(w, a)];
  return t == Topo::AscentIntermediary || t == Topo::DescentIntermediary;
}

std::pair<int, int> leap_range(const Word& w, int a) {
  if (!is_intermediary(w, a)) throw Error(ErrorCode::NotIntermediary, std::to_string(a));
  auto [gaps, home] = slopes(w, a);
  return {-home, static_cast<int>(gaps.size()) - 1 - home};
}

Word leap(const Word& w, int a, int r) {
  auto [lo, hi] = leap_range(w, a);
  if (r < lo || r > hi)
    throw Error(ErrorCode::LeapOutOfRange, "r=" + std::to_string(r) + " outside [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
  auto [gaps, home] = slopes(w, a);
  Word u;
  for (int x : w)
    if (x != a) u.push_back(x);
  u.insert(u.begin() + gaps[home + r], a);
  return u;
}

std::pair<Word, int> hop_with_count(const BuildingSet& b, const Word& w, int a) {
  if (!is_extended_b_permutation(b, w)) throw Error(ErrorCode::NotExtendedBPermutation, "word is not an extended permutation");
  auto t = topography(w)[position(w, a)];
  if (t != Topo::AscentIntermediary && t != Topo::DescentIntermediary)
    throw Error(ErrorCode::NotIntermediary, std::to_string(a));
  auto [lo, hi] = leap_range(w, a);
  const int step = t == Topo::AscentIntermediary ? 1 : -1;
  for (int r = step; r >= lo && r <= hi; r += step) {
    Word u = leap(w, a, r);
    if (is_extended_b_permutation(b, u)) return {u, r};
  }
  throw Error(ErrorCode::Internal, "no admissible leap for " + std::to_string(a));
}

Word hop(const BuildingSet& b, const Word& w, int a) { return hop_with_count(b, w, a).first; }

IntPolynomial h_via_descents(const BuildingSet& b) {
  std::vector<std::int64_t> c(b.n() + 1, 0);
  for (const auto& w : extended_b_permutations(b)) ++c[des(w)];
  return IntPolynomial(c);
}

DescentGammaReport gamma_via_descents(const BuildingSet& b) {
  require_connected_full(b);
  if (!is_chordal(b)) throw Error(ErrorCode::NotChordal, "descent formulas need a chordal building set");
  const int n = b.n();
  DescentGammaReport rep;
  auto words = extended_b_permutations(b);
  std::map<Word, int> index;
  for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = static_cast<int>(i);

  std::vector<std::int64_t> hc(n + 1, 0), gc(n + 1, 0);
  std::vector<char> hat(words.size(), 0);
  for (std::size_t i = 0; i < words.size(); ++i) {
    ++hc[des(words[i])];
    hat[i] = double_descents(words[i]) == 0;
    if (hat[i]) ++gc[des(words[i])];
  }
  rep.h_descents = IntPolynomial(hc);
  rep.gamma_descents = IntPolynomial(gc);
  rep.h_counting = h_extended_recursive(b);
  rep.gamma_counting = gamma_extended(b);
  rep.h_equal = rep.h_descents == rep.h_counting;
  rep.gamma_equal = rep.gamma_descents == rep.gamma_counting;

  std::vector<int> parent(words.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  rep.hops_involutive = rep.hops_commute = rep.hops_odd = true;
  std::vector<std::map<int, Word>> hops(words.size());
  for (std::size_t i = 0; i < words.size(); ++i)
    for (int a = 1; a <= n + 1; ++a) {
      if (!is_intermediary(words[i], a)) continue;
      auto [u, r] = hop_with_count(b, words[i], a);
      if (r % 2 == 0) rep.hops_odd = false;
      if (hop(b, u, a) != words[i]) rep.hops_involutive = false;
      hops[i][a] = u;
      parent[find(static_cast<int>(i))] = find(index.at(u));
    }
  for (std::size_t i = 0; i < words.size(); ++i)
    for (const auto& [a, ua] : hops[i])
      for (const auto& [c, uc] : hops[i]) {
        if (a >= c) continue;
        const auto& ha = hops[index.at(uc)];
        const auto& hc2 = hops[index.at(ua)];
        auto x = ha.find(a);
        auto y = hc2.find(c);
        if (x != ha.end() && y != hc2.end() && x->second != y->second) rep.hops_commute = false;
      }

  std::map<int, std::vector<int>> classes;
  for (std::size_t i = 0; i < words.size(); ++i) classes[find(static_cast<int>(i))].push_back(static_cast<int>(i));
  rep.num_classes = static_cast<int>(classes.size());
  rep.unique_representative = rep.class_identity_plus = rep.class_identity_minus = true;
  for (const auto& [root, members] : classes) {
    std::vector<std::int64_t> sum(n + 1, 0);
    int reps = 0, rep_des = 0;
    for (int i : members) {
      ++sum[des(words[i])];
      if (hat[i]) {
        ++reps;
        rep_des = des(words[i]);
      }
    }
    if (reps != 1) {
      rep.unique_representative = rep.class_identity_plus = rep.class_identity_minus = false;
      continue;
    }
    IntPolynomial lhs(sum);
    if (lhs != IntPolynomial::binomial_power(1, 1, n - 2 * rep_des).times_monomial(1, rep_des))
      rep.class_identity_plus = false;
    if (lhs != IntPolynomial::binomial_power(-1, 1, n - 2 * rep_des).times_monomial(1, rep_des))
      rep.class_identity_minus = false;
  }
  return rep;
}

}  // namespace nesto
