#include "nesto/orders.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "nesto/error.hpp"

namespace nesto {

void Poset::finish() {
  const int n = size();
  down_.assign(n, boost::dynamic_bitset<>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (up_[x].test(y)) down_[y].set(x);
  covers_.clear();
  for (int x = 0; x < n; ++x)
    for (int y = up_[x].find_first(); y != static_cast<int>(boost::dynamic_bitset<>::npos); y = up_[x].find_next(y))
      if (y != x && (up_[x] & down_[y]).count() == 2) covers_.emplace_back(x, y);
}

Poset Poset::from_order(std::vector<std::string> labels, const std::function<bool(int, int)>& leq) {
  Poset p;
  p.labels_ = std::move(labels);
  const int n = p.size();
  p.up_.assign(n, boost::dynamic_bitset<>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x == y || leq(x, y)) p.up_[x].set(y);
  p.finish();
  return p;
}

Poset Poset::from_relation(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& less) {
  Poset p;
  p.labels_ = std::move(labels);
  const int n = p.size();
  std::vector<std::vector<int>> succ(n);
  std::vector<int> indeg(n, 0);
  for (auto [x, y] : less) {
    if (x < 0 || y < 0 || x >= n || y >= n) throw Error(ErrorCode::InvalidArgument, "relation index out of range");
    succ[x].push_back(y);
    ++indeg[y];
  }
  std::vector<int> topo;
  for (int x = 0; x < n; ++x)
    if (indeg[x] == 0) topo.push_back(x);
  for (std::size_t k = 0; k < topo.size(); ++k)
    for (int y : succ[topo[k]])
      if (--indeg[y] == 0) topo.push_back(y);
  if (static_cast<int>(topo.size()) != n) throw Error(ErrorCode::InvalidArgument, "relation has a cycle");
  p.up_.assign(n, boost::dynamic_bitset<>(n));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    p.up_[*it].set(*it);
    for (int y : succ[*it]) p.up_[*it] |= p.up_[y];
  }
  p.finish();
  return p;
}

std::vector<int> Poset::minimal() const {
  std::vector<int> out;
  for (int x = 0; x < size(); ++x)
    if (down_[x].count() == 1) out.push_back(x);
  return out;
}

std::vector<int> Poset::maximal() const {
  std::vector<int> out;
  for (int x = 0; x < size(); ++x)
    if (up_[x].count() == 1) out.push_back(x);
  return out;
}

Poset Poset::dual() const {
  Poset p;
  p.labels_ = labels_;
  p.up_ = down_;
  p.finish();
  return p;
}

std::string Poset::dot() const {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n";
  for (int x = 0; x < size(); ++x) os << "  " << x << " [label=\"" << labels_[x] << "\"];\n";
  for (auto [x, y] : covers_) os << "  " << x << " -> " << y << ";\n";
  os << "}\n";
  return os.str();
}

namespace {

std::string word_label(const Word& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

// Inversion set of a permutation of [m] as a bitmask over value pairs.
std::uint64_t inversion_mask(const Word& w) {
  std::uint64_t mask = 0;
  for (auto [hi, lo] : inversions(w)) mask |= std::uint64_t{1} << ((hi - 1) * (hi - 2) / 2 + (lo - 1));
  return mask;
}

Poset inversion_poset(const std::vector<Word>& words, const std::vector<Word>& perms) {
  std::vector<std::uint64_t> inv;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < words.size(); ++i) {
    inv.push_back(inversion_mask(perms[i]));
    labels.push_back(word_label(words[i]));
  }
  return Poset::from_order(std::move(labels), [&](int x, int y) { return (inv[x] & ~inv[y]) == 0; });
}

}  // namespace

Poset weak_order(int m, std::vector<Word>* elements) {
  if (m < 0 || m > 7) throw Error(ErrorCode::SizeCap, "weak order needs m <= 7");
  Word w(m);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Word> words;
  do words.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  if (elements) *elements = words;
  return inversion_poset(words, words);
}

Poset partial_weak_order(int n, const BuildingSet* b, std::vector<Word>* elements) {
  if (n < 0 || n > 6) throw Error(ErrorCode::SizeCap, "partial weak order needs n <= 6");
  if (b && b->n() != n) throw Error(ErrorCode::InvalidArgument, "building set rank differs from n");
  auto words = b ? b_partial_permutations(*b) : all_partial_permutations(n);
  std::vector<Word> perms;
  for (const auto& w : words) perms.push_back(phi(w, n));
  if (elements) *elements = words;
  return inversion_poset(words, perms);
}

std::optional<int> meet(const Poset& p, int x, int y) {
  auto lower = p.down(x) & p.down(y);
  for (auto z = lower.find_first(); z != boost::dynamic_bitset<>::npos; z = lower.find_next(z))
    if (lower.is_subset_of(p.down(static_cast<int>(z)))) return static_cast<int>(z);
  return std::nullopt;
}

std::optional<int> join(const Poset& p, int x, int y) {
  auto upper = p.up(x) & p.up(y);
  for (auto z = upper.find_first(); z != boost::dynamic_bitset<>::npos; z = upper.find_next(z))
    if (upper.is_subset_of(p.up(static_cast<int>(z)))) return static_cast<int>(z);
  return std::nullopt;
}

LatticeReport lattice_check(const Poset& p) {
  LatticeReport r;
  for (int x = 0; x < p.size(); ++x)
    for (int y = x + 1; y < p.size(); ++y) {
      bool m = meet(p, x, y).has_value();
      if (!m || !join(p, x, y)) {
        r.is_lattice = false;
        r.x = x;
        r.y = y;
        r.missing_meet = !m;
        return r;
      }
    }
  return r;
}

std::vector<std::int64_t> moebius_row(const Poset& p, int u) {
  std::vector<int> above;
  const auto& up = p.up(u);
  for (auto z = up.find_first(); z != boost::dynamic_bitset<>::npos; z = up.find_next(z)) above.push_back(static_cast<int>(z));
  std::sort(above.begin(), above.end(), [&](int a, int b) { return p.down(a).count() < p.down(b).count(); });
  std::vector<std::int64_t> mu(p.size(), 0);
  for (int z : above) {
    if (z == u) {
      mu[z] = 1;
      continue;
    }
    std::int64_t s = 0;
    auto between = up & p.down(z);
    for (auto y = between.find_first(); y != boost::dynamic_bitset<>::npos; y = between.find_next(y))
      if (static_cast<int>(y) != z) s = checked_add(s, mu[y]);
    mu[z] = -s;
  }
  return mu;
}

std::int64_t moebius(const Poset& p, int u, int v) {
  if (!p.leq(u, v)) throw Error(ErrorCode::NotComparable, p.labels()[u] + " is not below " + p.labels()[v]);
  return moebius_row(p, u)[v];
}

bool verify_poset_map(const Poset& a, const Poset& b, const std::vector<int>& map) {
  const int n = a.size();
  if (b.size() != n || static_cast<int>(map.size()) != n) return false;
  std::vector<char> hit(n, 0);
  for (int x : map) {
    if (x < 0 || x >= n || hit[x]) return false;
    hit[x] = 1;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (a.leq(x, y) != b.leq(map[x], map[y])) return false;
  return true;
}

std::optional<std::vector<int>> find_poset_isomorphism(const Poset& a, const Poset& b) {
  const int n = a.size();
  if (b.size() != n || a.covers().size() != b.covers().size()) return std::nullopt;
  auto sig = [](const Poset& p, int x) { return std::make_pair(p.up(x).count(), p.down(x).count()); };
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return a.down(x).count() < a.down(y).count(); });
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  std::int64_t budget = IsoOptions{}.node_budget;
  std::function<bool(int)> rec = [&](int k) {
    if (--budget < 0) throw Error(ErrorCode::SearchBudgetExceeded, "poset isomorphism search");
    if (k == n) return true;
    int x = order[k];
    for (int y = 0; y < n; ++y) {
      if (used[y] || sig(a, x) != sig(b, y)) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        int z = order[j];
        if (a.leq(x, z) != b.leq(y, map[z]) || a.leq(z, x) != b.leq(map[z], y)) ok = false;
      }
      if (!ok) continue;
      map[x] = y;
      used[y] = 1;
      if (rec(k + 1)) return true;
      used[y] = 0;
    }
    map[x] = -1;
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return map;
}

std::vector<int> random_linear_extension(const Poset& p, std::mt19937_64& rng) {
  const int n = p.size();
  std::vector<int> remaining_below(n);
  for (int x = 0; x < n; ++x) remaining_below[x] = static_cast<int>(p.down(x).count()) - 1;
  std::vector<int> ready, out;
  for (int x = 0; x < n; ++x)
    if (remaining_below[x] == 0) ready.push_back(x);
  while (!ready.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
    std::size_t k = pick(rng);
    int x = ready[k];
    ready.erase(ready.begin() + static_cast<std::ptrdiff_t>(k));
    out.push_back(x);
    const auto& up = p.up(x);
    for (auto y = up.find_first(); y != boost::dynamic_bitset<>::npos; y = up.find_next(y))
      if (static_cast<int>(y) != x && --remaining_below[y] == 0) ready.push_back(static_cast<int>(y));
  }
  return out;
}

bool is_linear_extension(const Poset& p, const std::vector<int>& order) {
  const int n = p.size();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || pos[order[i]] >= 0) return false;
    pos[order[i]] = i;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p.less(x, y) && pos[x] > pos[y]) return false;
  return true;
}

int top_element(const std::vector<Subset>& collection, Subset i) {
  Subset covered;
  for (Subset c : collection)
    if (c.proper_subset_of(i)) covered = covered | c;
  Subset top = i - covered;
  if (top.size() != 1) throw Error(ErrorCode::InvalidArgument, "no unique top element in " + i.str());
  return top.min();
}

FlipPoset flip_poset(const BuildingSet& b, bool extended) {
  FlipPoset fp;
  if (extended) {
    fp.facets = extended_facets(b);
  } else {
    SimplicialComplex c = nested_complex(b);
    for (const auto& f : c.labeled_facets()) {
      ExtendedFace face;
      for (const auto& v : f) face.members.push_back(v.set);
      fp.facets.push_back(std::move(face));
    }
  }
  const int m = static_cast<int>(fp.facets.size());
  std::vector<std::string> labels;
  for (const auto& f : fp.facets) {
    std::string s;
    for (const auto& v : f.vertices()) s += (s.empty() ? "" : " ") + v.label();
    labels.push_back("{" + s + "}");
  }
  auto only = [](const std::vector<Subset>& x, const std::vector<Subset>& y) {
    std::vector<Subset> out;
    for (Subset s : x)
      if (std::find(y.begin(), y.end(), s) == y.end()) out.push_back(s);
    return out;
  };
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q) {
      const auto& N = fp.facets[p];
      const auto& M = fp.facets[q];
      auto in_n = only(N.members, M.members);
      auto in_m = only(M.members, N.members);
      if (N.designs == M.designs) {
        if (in_n.size() != 1 || in_m.size() != 1) continue;
        bool forward = top_element(N.members, in_n[0]) < top_element(M.members, in_m[0]);
        fp.flips.push_back(forward ? std::make_pair(p, q) : std::make_pair(q, p));
      } else {
        if (in_n.size() + in_m.size() != 1) continue;
        Subset dn = Subset::from_elements(N.designs), dm = Subset::from_elements(M.designs);
        if ((dn | dm).size() - (dn & dm).size() != 1) continue;
        // From the larger support (fewer designs) to the smaller.
        fp.flips.push_back(dn.size() < dm.size() ? std::make_pair(p, q) : std::make_pair(q, p));
      }
    }
  try {
    fp.poset = Poset::from_relation(labels, fp.flips);
    fp.acyclic = true;
  } catch (const Error&) {
    fp.acyclic = false;
  }
  return fp;
}

ExtendedFace facet_of_partial_permutation(const BuildingSet& b, const Word& w) {
  if (!is_b_partial(b, w)) throw Error(ErrorCode::InvalidArgument, "word is not a partial permutation of the building set");
  ExtendedFace face;
  Subset prefix;
  for (int x : w) {
    prefix = prefix.with(x);
    for (Subset m : maximal_elements(b, prefix))
      if (m.contains(x)) face.members.push_back(m);
  }
  std::sort(face.members.begin(), face.members.end(), CanonicalLess{});
  face.designs = (b.ground() - prefix).elements();
  return face;
}

ShellingReport verify_shelling(const SimplicialComplex& c, const std::vector<int>& order) {
  const int d = c.facet_size();
  if (d < 0) throw Error(ErrorCode::NotPure, "shelling needs a pure complex");
  const int r = static_cast<int>(c.num_facets());
  std::vector<int> check = order;
  std::sort(check.begin(), check.end());
  for (int i = 0; i < static_cast<int>(check.size()); ++i)
    if (check[i] != i) throw Error(ErrorCode::InvalidArgument, "order must list every facet once");
  if (static_cast<int>(order.size()) != r) throw Error(ErrorCode::InvalidArgument, "order must list every facet once");
  const int nv = static_cast<int>(c.vertices().size());
  std::vector<boost::dynamic_bitset<>> f(r, boost::dynamic_bitset<>(nv));
  for (int k = 0; k < r; ++k)
    for (int v : c.facets()[order[k]]) f[k].set(v);
  ShellingReport rep;
  for (int j = 1; j < r; ++j) {
    // Vertices v of F_j such that F_j - v is shared with an earlier facet.
    boost::dynamic_bitset<> ridge_missing(nv);
    for (int l = 0; l < j; ++l) {
      auto common = f[l] & f[j];
      if (static_cast<int>(common.count()) == d - 1) ridge_missing |= f[j] - common;
    }
    for (int i = 0; i < j; ++i) {
      auto outside = f[j] - f[i];
      if (!outside.intersects(ridge_missing)) {
        rep.ok = false;
        rep.i = i;
        rep.j = j;
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace nesto
