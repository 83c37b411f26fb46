#include "nesto/complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "nesto/error.hpp"

namespace nesto {

std::string Vertex::label() const {
  switch (kind) {
    case Kind::Member: return set.str();
    case Kind::Design: return "x_" + std::to_string(index);
    case Kind::Plain: return "v" + std::to_string(index);
  }
  return "?";
}

Vertex Vertex::parse(const std::string& s) {
  try {
    if (s.size() >= 2 && s.front() == '{' && s.back() == '}') {
      std::vector<int> elems;
      std::string body = s.substr(1, s.size() - 2);
      std::size_t pos = 0;
      while (pos < body.size()) {
        std::size_t next = body.find(',', pos);
        if (next == std::string::npos) next = body.size();
        elems.push_back(std::stoi(body.substr(pos, next - pos)));
        pos = next + 1;
      }
      return member(Subset::from_elements(elems));
    }
    if (s.rfind("x_", 0) == 0) return design(std::stoi(s.substr(2)));
    if (s.rfind("v", 0) == 0) return plain(std::stoi(s.substr(1)));
  } catch (const Error&) {
    throw;
  } catch (...) {
  }
  throw Error(ErrorCode::ParseError, "bad vertex label '" + s + "'");
}

bool operator<(const Vertex& a, const Vertex& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.kind == Vertex::Kind::Member) return canonical_less(a.set, b.set);
  return a.index < b.index;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<Vertex>>& facets) {
  SimplicialComplex c;
  for (const auto& f : facets) c.vertices_.insert(c.vertices_.end(), f.begin(), f.end());
  std::sort(c.vertices_.begin(), c.vertices_.end());
  c.vertices_.erase(std::unique(c.vertices_.begin(), c.vertices_.end()), c.vertices_.end());
  std::vector<Face> fs;
  for (const auto& f : facets) {
    Face idx;
    for (const auto& v : f) idx.push_back(*c.index_of(v));
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
      throw Error(ErrorCode::InvalidArgument, "repeated vertex in facet");
    fs.push_back(std::move(idx));
  }
  std::sort(fs.begin(), fs.end(), [](const Face& x, const Face& y) {
    return x.size() != y.size() ? x.size() > y.size() : x < y;
  });
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  for (auto& f : fs) {
    bool dominated = false;
    for (const auto& g : c.facets_)
      if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
        dominated = true;
        break;
      }
    if (!dominated) c.facets_.push_back(f);
  }
  std::sort(c.facets_.begin(), c.facets_.end());
  return c;
}

std::optional<int> SimplicialComplex::index_of(const Vertex& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || !(*it == v)) return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

std::vector<Vertex> SimplicialComplex::labels(const Face& f) const {
  std::vector<Vertex> out;
  for (int i : f) out.push_back(vertices_.at(i));
  return out;
}

std::vector<std::vector<Vertex>> SimplicialComplex::labeled_facets() const {
  std::vector<std::vector<Vertex>> out;
  for (const auto& f : facets_) out.push_back(labels(f));
  return out;
}

bool SimplicialComplex::is_pure() const { return facet_size() >= 0; }

int SimplicialComplex::facet_size() const {
  if (facets_.empty()) return -1;
  std::size_t k = facets_.front().size();
  for (const auto& f : facets_)
    if (f.size() != k) return -1;
  return static_cast<int>(k);
}

bool SimplicialComplex::is_face(const Face& f) const {
  for (const auto& g : facets_)
    if (std::includes(g.begin(), g.end(), f.begin(), f.end())) return true;
  return false;
}

std::vector<Face> SimplicialComplex::all_faces() const {
  std::vector<Face> out;
  for (const auto& f : facets_) {
    const std::size_t k = f.size();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
      Face g;
      for (std::size_t i = 0; i < k; ++i)
        if (m >> i & 1) g.push_back(f[i]);
      out.push_back(std::move(g));
    }
  }
  std::sort(out.begin(), out.end(), [](const Face& x, const Face& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SimplicialComplex SimplicialComplex::induced(const std::vector<int>& vertex_subset) const {
  std::vector<int> keep = vertex_subset;
  std::sort(keep.begin(), keep.end());
  std::vector<std::vector<Vertex>> fs;
  for (const auto& f : facets_) {
    Face g;
    std::set_intersection(f.begin(), f.end(), keep.begin(), keep.end(), std::back_inserter(g));
    fs.push_back(labels(g));
  }
  return from_facets(fs);
}

bool SimplicialComplex::same_facets(const SimplicialComplex& o) const {
  return vertices_ == o.vertices_ && facets_ == o.facets_;
}

std::vector<Vertex> ExtendedFace::vertices() const {
  std::vector<Vertex> out;
  for (Subset s : members) out.push_back(Vertex::member(s));
  for (int d : designs) out.push_back(Vertex::design(d));
  return out;
}

namespace {

void require_members(const BuildingSet& b, const std::vector<Subset>& members) {
  for (Subset s : members)
    if (!b.contains(s)) throw Error(ErrorCode::MemberNotInBuildingSet, s.str());
}

bool nested_core(const BuildingSet& b, const std::vector<Subset>& members) {
  const std::size_t k = members.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      Subset x = members[i], y = members[j];
      if (x == y) return false;
      if (x.intersects(y) && !x.subset_of(y) && !y.subset_of(x)) return false;
    }
  // Pairwise disjoint subfamilies of size >= 2 must not union into b.
  bool ok = true;
  std::function<void(std::size_t, Subset, int)> rec = [&](std::size_t from, Subset acc, int cnt) {
    if (!ok) return;
    if (cnt >= 2 && b.contains(acc)) {
      ok = false;
      return;
    }
    for (std::size_t i = from; i < k; ++i)
      if (!members[i].intersects(acc)) rec(i + 1, acc | members[i], cnt + 1);
  };
  rec(0, Subset{}, 0);
  return ok;
}

}  // namespace

bool is_nested(const BuildingSet& b, const std::vector<Subset>& members) {
  require_members(b, members);
  auto maxima = maximal_elements(b);
  for (Subset s : members)
    if (std::find(maxima.begin(), maxima.end(), s) != maxima.end()) return false;
  return nested_core(b, members);
}

bool is_extended_nested(const BuildingSet& b, const std::vector<Subset>& members, const std::vector<int>& designs) {
  require_members(b, members);
  Subset d;
  for (int i : designs) {
    if (i < 1 || i > kHardMaxN || !b.ground().contains(i))
      throw Error(ErrorCode::InvalidArgument, "design index " + std::to_string(i) + " outside ground set");
    if (d.contains(i)) return false;
    d = d.with(i);
  }
  for (Subset s : members)
    if (s.intersects(d)) return false;
  return nested_core(b, members);
}

std::vector<std::vector<Subset>> maximal_nested_with_maxima(const BuildingSet& b, Subset s) {
  std::function<std::vector<std::vector<Subset>>(Subset)> rec;
  // Maximal nested collections of the restriction to a single member m, m included.
  auto connected = [&](Subset m) {
    std::vector<std::vector<Subset>> out;
    for (int r : m.elements()) {
      for (auto& rest : rec(m.without(r))) {
        rest.push_back(m);
        out.push_back(std::move(rest));
      }
    }
    return out;
  };
  rec = [&](Subset t) {
    std::vector<std::vector<Subset>> acc{{}};
    for (Subset m : maximal_elements(b, t)) {
      auto part = connected(m);
      std::vector<std::vector<Subset>> next;
      next.reserve(acc.size() * part.size());
      for (const auto& a : acc)
        for (const auto& p : part) {
          auto merged = a;
          merged.insert(merged.end(), p.begin(), p.end());
          next.push_back(std::move(merged));
        }
      acc = std::move(next);
    }
    return acc;
  };
  auto all = rec(b.ground() & s);
  for (auto& f : all) std::sort(f.begin(), f.end(), CanonicalLess{});
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), CanonicalLess{});
  });
  return all;
}

std::vector<ExtendedFace> extended_facets(const BuildingSet& b) {
  require_size(b.rank(), "extended facet enumeration");
  std::vector<ExtendedFace> out;
  for_each_submask(b.ground(), [&](Subset s) {
    auto designs = (b.ground() - s).elements();
    for (auto& f : maximal_nested_with_maxima(b, s)) out.push_back({std::move(f), designs});
  });
  std::sort(out.begin(), out.end(), [](const ExtendedFace& x, const ExtendedFace& y) {
    auto vx = x.vertices(), vy = y.vertices();
    return std::lexicographical_compare(vx.begin(), vx.end(), vy.begin(), vy.end());
  });
  return out;
}

SimplicialComplex nested_complex(const BuildingSet& b) {
  require_size(b.rank(), "nested complex");
  auto maxima = maximal_elements(b);
  std::vector<std::vector<Vertex>> facets;
  for (const auto& f : maximal_nested_with_maxima(b, b.ground())) {
    std::vector<Vertex> vs;
    for (Subset s : f)
      if (std::find(maxima.begin(), maxima.end(), s) == maxima.end()) vs.push_back(Vertex::member(s));
    facets.push_back(std::move(vs));
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex extended_nested_complex(const BuildingSet& b) {
  std::vector<std::vector<Vertex>> facets;
  for (const auto& f : extended_facets(b)) facets.push_back(f.vertices());
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex join(const std::vector<SimplicialComplex>& parts) {
  std::vector<std::vector<Vertex>> acc{{}};
  for (const auto& p : parts) {
    std::vector<std::vector<Vertex>> next;
    for (const auto& a : acc)
      for (const auto& f : p.labeled_facets()) {
        auto merged = a;
        merged.insert(merged.end(), f.begin(), f.end());
        next.push_back(std::move(merged));
      }
    acc = std::move(next);
  }
  return SimplicialComplex::from_facets(acc);
}

SimplicialComplex link(const SimplicialComplex& c, const Vertex& v) {
  auto idx = c.index_of(v);
  if (!idx) throw Error(ErrorCode::VertexNotInComplex, v.label());
  std::vector<std::vector<Vertex>> facets;
  for (const auto& f : c.facets()) {
    if (!std::binary_search(f.begin(), f.end(), *idx)) continue;
    std::vector<Vertex> rest;
    for (int i : f)
      if (i != *idx) rest.push_back(c.vertices()[i]);
    facets.push_back(std::move(rest));
  }
  return SimplicialComplex::from_facets(facets);
}

namespace {

SimplicialComplex relabel(const SimplicialComplex& c, const std::function<Vertex(const Vertex&)>& f) {
  std::vector<std::vector<Vertex>> facets;
  for (const auto& fc : c.labeled_facets()) {
    std::vector<Vertex> vs;
    for (const auto& v : fc) vs.push_back(f(v));
    facets.push_back(std::move(vs));
  }
  return SimplicialComplex::from_facets(facets);
}

}  // namespace

LinkDecomposition link_decomposition(const BuildingSet& b, const Vertex& v) {
  LinkDecomposition d;
  SimplicialComplex full = extended_nested_complex(b);
  d.explicit_link = link(full, v);
  if (v.is_design()) {
    d.design = true;
    d.components = connected_components(restriction(b, b.ground().without(v.index)));
    std::vector<SimplicialComplex> parts;
    for (const auto& comp : d.components) parts.push_back(extended_nested_complex(comp));
    d.model = join(parts);
  } else if (v.is_member()) {
    Subset c = v.set;
    d.restricted = restriction(b, c);
    d.contracted = contraction(b, c);
    SimplicialComplex left = nested_complex(d.restricted);
    SimplicialComplex right = relabel(extended_nested_complex(d.contracted), [&](const Vertex& x) {
      if (x.is_member() && b.contains(x.set | c)) return Vertex::member(x.set | c);
      return x;
    });
    d.model = join({left, right});
  } else {
    throw Error(ErrorCode::VertexNotInComplex, v.label());
  }
  d.map_verified = d.model.same_facets(d.explicit_link);
  d.isomorphic = is_isomorphic(d.model, d.explicit_link);
  return d;
}

std::vector<std::vector<int>> minimal_non_faces(const SimplicialComplex& c) {
  auto faces = c.all_faces();
  std::set<Face> face_set(faces.begin(), faces.end());
  const int nv = static_cast<int>(c.vertices().size());
  std::vector<std::vector<int>> out;
  // A minimal non-face is F + v with F a face; v above max(F) avoids repeats
  // because every minimal non-face has its max-deleted subset as a face.
  for (const auto& f : faces) {
    int start = f.empty() ? 0 : f.back() + 1;
    for (int v = start; v < nv; ++v) {
      Face g = f;
      g.push_back(v);
      if (face_set.count(g)) continue;
      bool minimal = true;
      for (std::size_t drop = 0; drop + 1 < g.size() && minimal; ++drop) {
        Face h;
        for (std::size_t i = 0; i < g.size(); ++i)
          if (i != drop) h.push_back(g[i]);
        if (!face_set.count(h)) minimal = false;
      }
      if (minimal) out.push_back(std::move(g));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

SimplicialComplex independence_complex(const SimplicialComplex& c) {
  std::vector<std::vector<Vertex>> facets;
  for (const auto& m : minimal_non_faces(c)) facets.push_back(c.labels(m));
  return SimplicialComplex::from_facets(facets);
}

std::vector<std::pair<int, int>> independence_graph(const SimplicialComplex& c) {
  std::set<std::pair<int, int>> edges;
  for (const auto& m : minimal_non_faces(c))
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j) edges.emplace(m[i], m[j]);
  return {edges.begin(), edges.end()};
}

std::vector<StrongComponent> strongly_connected_components(const BuildingSet& b) {
  SimplicialComplex c = nested_complex(b);
  const int nv = static_cast<int>(c.vertices().size());
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [u, v] : independence_graph(c)) parent[find(u)] = find(v);
  std::vector<StrongComponent> out;
  std::vector<int> slot(nv, -1);
  for (int v = 0; v < nv; ++v) {
    int r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].members.push_back(c.vertices()[v].set);
  }
  for (auto& comp : out) {
    std::vector<int> idx;
    for (Subset s : comp.members) idx.push_back(*c.index_of(Vertex::member(s)));
    SimplicialComplex sub = c.induced(idx);
    int best = 0;
    for (const auto& f : sub.facets()) best = std::max(best, static_cast<int>(f.size()));
    comp.m_size = best - 1;
  }
  return out;
}

bool is_strong(const BuildingSet& b) {
  auto comps = strongly_connected_components(b);
  for (Subset m : maximal_elements(b)) {
    int hits = 0;
    for (const auto& comp : comps)
      if (comp.members.front().subset_of(m)) ++hits;
    if (hits > 1) return false;
  }
  return true;
}

namespace {

struct IsoSearch {
  const SimplicialComplex& a;
  const SimplicialComplex& b;
  std::int64_t budget;
  int nv;
  std::vector<std::vector<int>> ca, cb;  // co-occurrence counts
  std::vector<std::vector<int>> sig_a, sig_b;
  std::vector<int> order, map, used;
  std::set<Face> target;

  IsoSearch(const SimplicialComplex& x, const SimplicialComplex& y, std::int64_t bud) : a(x), b(y), budget(bud) {
    nv = static_cast<int>(a.vertices().size());
    ca = cooc(a);
    cb = cooc(b);
    sig_a = signatures(a, ca);
    sig_b = signatures(b, cb);
    target.insert(b.facets().begin(), b.facets().end());
  }

  std::vector<std::vector<int>> cooc(const SimplicialComplex& c) const {
    std::vector<std::vector<int>> m(nv, std::vector<int>(nv, 0));
    for (const auto& f : c.facets())
      for (int u : f)
        for (int v : f) ++m[u][v];
    return m;
  }

  std::vector<std::vector<int>> signatures(const SimplicialComplex& c, const std::vector<std::vector<int>>& m) const {
    std::vector<std::vector<int>> s(nv);
    for (int v = 0; v < nv; ++v) {
      s[v] = m[v];
      std::sort(s[v].begin(), s[v].end());
      std::vector<int> sizes;
      for (const auto& f : c.facets())
        if (std::binary_search(f.begin(), f.end(), v)) sizes.push_back(static_cast<int>(f.size()));
      std::sort(sizes.begin(), sizes.end());
      s[v].push_back(-1);
      s[v].insert(s[v].end(), sizes.begin(), sizes.end());
    }
    return s;
  }

  bool run() {
    order.resize(nv);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return ca[x][x] > ca[y][y]; });
    map.assign(nv, -1);
    used.assign(nv, 0);
    return rec(0);
  }

  bool rec(int k) {
    if (--budget < 0) throw Error(ErrorCode::SearchBudgetExceeded, "isomorphism search");
    if (k == nv) {
      for (const auto& f : a.facets()) {
        Face g;
        for (int v : f) g.push_back(map[v]);
        std::sort(g.begin(), g.end());
        if (!target.count(g)) return false;
      }
      return true;
    }
    int u = order[k];
    for (int w = 0; w < nv; ++w) {
      if (used[w] || sig_a[u] != sig_b[w]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        int p = order[j];
        if (ca[u][p] != cb[w][map[p]]) ok = false;
      }
      if (!ok) continue;
      map[u] = w;
      used[w] = 1;
      if (rec(k + 1)) return true;
      used[w] = 0;
      map[u] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b, IsoOptions opts) {
  if (a.vertices().size() != b.vertices().size() || a.facets().size() != b.facets().size()) return std::nullopt;
  auto sizes = [](const SimplicialComplex& c) {
    std::vector<std::size_t> s;
    for (const auto& f : c.facets()) s.push_back(f.size());
    std::sort(s.begin(), s.end());
    return s;
  };
  if (sizes(a) != sizes(b)) return std::nullopt;
  IsoSearch search(a, b, opts.node_budget);
  if (!search.run()) return std::nullopt;
  return search.map;
}

bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) { return find_isomorphism(a, b).has_value(); }

bool verify_vertex_map(const SimplicialComplex& a, const SimplicialComplex& b, const VertexMap& map) {
  const auto& va = a.vertices();
  if (va.size() != b.vertices().size()) return false;
  std::vector<int> img(va.size(), -1);
  std::vector<int> hit(va.size(), 0);
  for (std::size_t i = 0; i < va.size(); ++i) {
    auto it = map.find(va[i].label());
    if (it == map.end()) return false;
    auto j = b.index_of(it->second);
    if (!j || hit[*j]) return false;
    hit[*j] = 1;
    img[i] = *j;
  }
  std::set<Face> target(b.facets().begin(), b.facets().end());
  std::set<Face> image;
  for (const auto& f : a.facets()) {
    Face g;
    for (int v : f) g.push_back(img[v]);
    std::sort(g.begin(), g.end());
    image.insert(g);
  }
  return image == target;
}

}  // namespace nesto
