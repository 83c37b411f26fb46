#include "nesto/geom.hpp"

#include <algorithm>
#include <set>

#include "nesto/error.hpp"
#include "nesto/perms.hpp"

namespace nesto {

SimplicialComplex stellar_subdivide(const SimplicialComplex& c, const std::vector<Vertex>& face, const Vertex& apex) {
  Face idx;
  for (const auto& v : face) {
    auto i = c.index_of(v);
    if (!i) throw Error(ErrorCode::FaceMissing, "vertex " + v.label() + " absent");
    idx.push_back(*i);
  }
  std::sort(idx.begin(), idx.end());
  if (!c.is_face(idx)) throw Error(ErrorCode::FaceMissing, "face to subdivide is absent");
  std::vector<std::vector<Vertex>> out;
  for (const auto& g : c.facets()) {
    if (!std::includes(g.begin(), g.end(), idx.begin(), idx.end())) {
      out.push_back(c.labels(g));
      continue;
    }
    for (int drop : idx) {
      std::vector<Vertex> nf{apex};
      for (int v : g)
        if (v != drop) nf.push_back(c.vertices()[v]);
      out.push_back(std::move(nf));
    }
  }
  return SimplicialComplex::from_facets(out);
}

StellarResult stellar_realization(const BuildingSet& b) {
  require_size(b.rank(), "stellar realization");
  std::vector<std::vector<Vertex>> cross;
  for_each_submask(b.ground(), [&](Subset s) {
    std::vector<Vertex> f;
    for (int i : b.ground().elements())
      f.push_back(s.contains(i) ? Vertex::member(Subset::singleton(i)) : Vertex::design(i));
    cross.push_back(std::move(f));
  });
  StellarResult r{SimplicialComplex::from_facets(cross), {}};
  std::vector<Subset> targets;
  for (Subset s : b.sets())
    if (s.size() > 1) targets.push_back(s);
  std::stable_sort(targets.begin(), targets.end(), [](Subset x, Subset y) {
    return x.size() != y.size() ? x.size() > y.size() : canonical_less(x, y);
  });
  for (Subset t : targets) {
    std::vector<Vertex> face;
    for (int i : t.elements()) face.push_back(Vertex::member(Subset::singleton(i)));
    StellarStep step{t, static_cast<int>(r.complex.num_facets()), 0};
    r.complex = stellar_subdivide(r.complex, face, Vertex::member(t));
    step.facets_after = static_cast<int>(r.complex.num_facets());
    r.steps.push_back(step);
  }
  return r;
}

Coords extended_vertex_coords(const BuildingSet& b, const ExtendedFace& facet) {
  RootedForest f = nested_to_forest(b, facet);
  Coords v(b.n(), 0);
  for (int k : b.ground().elements())
    if (f.nodes.contains(k)) v[k - 1] = count_containing(b, k) - f.descendants(k).size() + 1;
  return v;
}

Coords minkowski_vertex_coords(const BuildingSet& b, const ExtendedFace& facet) {
  RootedForest f = nested_to_forest(b, facet);
  Coords v(b.n(), 0);
  for (int k : b.ground().elements()) {
    if (!f.nodes.contains(k)) continue;
    const Subset below = f.descendants(k);
    std::int64_t c = 1;
    for (Subset s : b.sets())
      if (s.contains(k) && !s.subset_of(below)) ++c;
    v[k - 1] = c;
  }
  return v;
}

Coords nestohedron_vertex_coords(const BuildingSet& b, const std::vector<Subset>& facet) {
  ExtendedFace face{facet, {}};
  for (Subset m : maximal_elements(b))
    if (std::find(facet.begin(), facet.end(), m) == facet.end()) face.members.push_back(m);
  std::sort(face.members.begin(), face.members.end(), CanonicalLess{});
  RootedForest t = nested_to_forest(b, face);
  Coords v(b.n(), 0);
  for (int i : b.ground().elements()) {
    Subset below = t.descendants(i);
    for (Subset s : b.sets())
      if (s.contains(i) && s.subset_of(below)) ++v[i - 1];
  }
  return v;
}

std::vector<std::int64_t> default_cost(int n, bool extended) {
  std::vector<std::int64_t> c(n);
  for (int i = 0; i < n; ++i) c[i] = extended ? -(n - i) : n - i;
  return c;
}

Orientation cost_orientation(const BuildingSet& b, const std::vector<std::int64_t>& c, bool extended) {
  if (static_cast<int>(c.size()) != b.n()) throw Error(ErrorCode::InvalidArgument, "cost vector length must be n");
  Orientation o;
  if (extended) {
    o.facets = extended_facets(b);
  } else {
    for (const auto& f : nested_complex(b).labeled_facets()) {
      ExtendedFace face;
      for (const auto& v : f) face.members.push_back(v.set);
      o.facets.push_back(std::move(face));
    }
  }
  std::vector<std::int64_t> value;
  for (const auto& f : o.facets) {
    o.coords.push_back(extended ? extended_vertex_coords(b, f) : nestohedron_vertex_coords(b, f.members));
    std::int64_t s = 0;
    for (int k = 0; k < b.n(); ++k) s = checked_add(s, checked_mul(c[k], o.coords.back()[k]));
    value.push_back(s);
  }
  const int m = static_cast<int>(o.facets.size());
  std::vector<std::set<std::string>> labels(m);
  for (int p = 0; p < m; ++p)
    for (const auto& v : o.facets[p].vertices()) labels[p].insert(v.label());
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q) {
      std::vector<std::string> common;
      std::set_intersection(labels[p].begin(), labels[p].end(), labels[q].begin(), labels[q].end(), std::back_inserter(common));
      if (common.size() + 1 != labels[p].size() || labels[p].size() != labels[q].size()) continue;
      if (value[p] == value[q])
        throw Error(ErrorCode::NonGenericCost, "adjacent facets " + std::to_string(p) + " and " + std::to_string(q) + " tie");
      o.edges.push_back(value[p] < value[q] ? std::make_pair(p, q) : std::make_pair(q, p));
    }
  std::vector<int> indeg(m, 0);
  std::vector<std::vector<int>> succ(m);
  for (auto [p, q] : o.edges) {
    succ[p].push_back(q);
    ++indeg[q];
  }
  std::vector<int> ready;
  for (int p = 0; p < m; ++p)
    if (indeg[p] == 0) ready.push_back(p);
  std::size_t seen = 0;
  while (!ready.empty()) {
    int p = ready.back();
    ready.pop_back();
    ++seen;
    for (int q : succ[p])
      if (--indeg[q] == 0) ready.push_back(q);
  }
  o.acyclic = static_cast<int>(seen) == m;
  return o;
}

}  // namespace nesto
