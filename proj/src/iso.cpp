#include "nesto/iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "nesto/error.hpp"

namespace nesto {

namespace {

Subset shift(Subset s, int by) {
  Subset out;
  for (int x : s.elements()) out = out.with(x + by);
  return out;
}

IsoConstruction finish(const SimplicialComplex& source, BuildingSet target, const SimplicialComplex& target_complex, VertexMap map) {
  IsoConstruction r{std::move(target), std::move(map), false, false};
  r.map_verified = check_map(source, target_complex, r.map);
  r.isomorphic = is_isomorphic(source, target_complex);
  return r;
}

void require_interval(const BuildingSet& b) {
  if (b.ground() != Subset::full(b.n())) throw Error(ErrorCode::InvalidArgument, "ground set must be [n]");
  if (!is_interval_building_set(b)) throw Error(ErrorCode::NotIntervalBuildingSet, "every member must be an interval");
}

}  // namespace

bool is_interval_building_set(const BuildingSet& b) {
  return std::all_of(b.sets().begin(), b.sets().end(), [](Subset s) { return s.is_interval(); });
}

IsoConstruction interval_extension(const BuildingSet& b) {
  require_interval(b);
  const int n = b.n();
  require_size(n + 1, "interval extension");
  std::vector<Subset> sets = b.sets();
  for (int k = 1; k <= n + 1; ++k) sets.push_back(Subset::interval(k, n + 1));
  BuildingSet target = BuildingSet::validate(sets, n + 1);
  VertexMap map;
  for (Subset s : b.sets()) map[Vertex::member(s).label()] = Vertex::member(s);
  for (int i = 1; i <= n; ++i) map[Vertex::design(i).label()] = Vertex::member(Subset::interval(i + 1, n + 1));
  return finish(extended_nested_complex(b), target, nested_complex(target), std::move(map));
}

IsoConstruction interval_rotation(const BuildingSet& b) {
  require_interval(b);
  const int n = b.n();
  for (int k = 1; k <= n; ++k)
    if (!b.contains(Subset::interval(1, k)))
      throw Error(ErrorCode::PreconditionIntervalsMissing, "missing " + Subset::interval(1, k).str());
  const Subset full = Subset::full(n);
  auto rot = [&](Subset s) {
    if (s.min() > 1) return shift(s, -1);
    return Subset::interval(s.max() + 1, n);
  };
  std::vector<Subset> sets{full};
  VertexMap map;
  for (Subset s : b.sets()) {
    if (s == full) continue;
    Subset img = rot(s);
    sets.push_back(img);
    map[Vertex::member(s).label()] = Vertex::member(img);
  }
  BuildingSet target = BuildingSet::validate(sets, n);
  return finish(nested_complex(b), target, nested_complex(target), std::move(map));
}

IsoConstruction extended_interval_rotation(const BuildingSet& b) {
  require_interval(b);
  const int n = b.n();
  for (int k = 1; k <= n; ++k)
    for (Subset need : {Subset::interval(1, k), Subset::interval(k, n)})
      if (!b.contains(need)) throw Error(ErrorCode::PreconditionIntervalsMissing, "missing " + need.str());
  std::vector<Subset> sets;
  VertexMap map;
  for (Subset s : b.sets()) {
    if (s.min() > 1) {
      sets.push_back(shift(s, -1));
      map[Vertex::member(s).label()] = Vertex::member(shift(s, -1));
    } else {
      map[Vertex::member(s).label()] = Vertex::design(s.max());
    }
  }
  for (int k = 1; k <= n; ++k) {
    sets.push_back(Subset::interval(k, n));
    map[Vertex::design(k).label()] = Vertex::member(Subset::interval(k, n));
  }
  BuildingSet target = BuildingSet::validate(sets, n);
  return finish(extended_nested_complex(b), target, extended_nested_complex(target), std::move(map));
}

namespace {

Subset flip_subset(Subset s, int n) {
  Subset out;
  for (int x : s.elements()) out = out.with(n + 1 - x);
  return out;
}

}  // namespace

BuildingSet flip_building_set(const BuildingSet& b) {
  const int n = b.n();
  std::vector<Subset> sets;
  for (Subset s : b.sets()) sets.push_back(flip_subset(s, n));
  return BuildingSet::trusted(n, flip_subset(b.ground(), n), sets);
}

IsoConstruction flip(const BuildingSet& b) {
  const int n = b.n();
  BuildingSet target = flip_building_set(b);
  VertexMap map;
  for (Subset s : b.sets()) map[Vertex::member(s).label()] = Vertex::member(flip_subset(s, n));
  for (int v : b.ground().elements()) map[Vertex::design(v).label()] = Vertex::design(n + 1 - v);
  return finish(extended_nested_complex(b), target, extended_nested_complex(target), std::move(map));
}

int SpiderSpec::leg_offset(int i) const {
  return std::accumulate(leg_lengths.begin(), leg_lengths.begin() + i, 0);
}

SpiderSpec SpiderSpec::from_legs(const std::vector<BuildingSet>& legs) {
  SpiderSpec s;
  int total = 0;
  for (const auto& leg : legs) {
    if (leg.ground() != Subset::full(leg.n()) || leg.n() == 0)
      throw Error(ErrorCode::NotSpider, "each leg must be a building set on [l] with l >= 1");
    s.leg_lengths.push_back(leg.n());
    total += leg.n();
  }
  require_size(total, "spider");
  std::vector<Subset> sets;
  std::vector<Subset> bodies{Subset{}};
  for (std::size_t i = 0; i < legs.size(); ++i) {
    const int off = s.leg_offset(static_cast<int>(i));
    std::vector<Subset> next;
    for (Subset m : legs[i].sets()) {
      if (!m.contains(1)) sets.push_back(shift(m, off));
    }
    for (Subset acc : bodies) {
      next.push_back(acc);
      for (Subset m : legs[i].sets())
        if (m.contains(1)) next.push_back(acc | shift(m, off));
    }
    bodies = std::move(next);
  }
  for (Subset m : bodies)
    if (!m.empty()) sets.push_back(m);
  s.b = BuildingSet::validate(sets, total);
  return s;
}

std::string spider_violation(const SpiderSpec& s) {
  const int n = std::accumulate(s.leg_lengths.begin(), s.leg_lengths.end(), 0);
  if (s.b.n() != n || s.b.ground() != Subset::full(n)) return "ground set must be the union of the legs";
  std::vector<Subset> firsts;
  for (std::size_t i = 0; i < s.leg_lengths.size(); ++i) {
    const int off = s.leg_offset(static_cast<int>(i));
    const int len = s.leg_lengths[i];
    if (len < 1) return "leg " + std::to_string(i + 1) + " is empty";
    const Subset leg = Subset::interval(off + 1, off + len);
    const int first = off + 1;
    firsts.push_back(Subset::singleton(first));
    for (int k = 1; k <= len; ++k)
      if (!s.b.contains(Subset::interval(first, off + k)))
        return "condition 1: leg " + std::to_string(i + 1) + " misses " + Subset::interval(first, off + k).str();
    for (Subset m : s.b.sets()) {
      if (m.subset_of(leg) && !m.is_interval()) return "condition 1: " + m.str() + " is not an interval";
      if (m.intersects(leg) && !m.subset_of(leg) && !m.contains(first))
        return "condition 1: " + m.str() + " leaves leg " + std::to_string(i + 1) + " without its first vertex";
      Subset r = m & leg;
      if (!r.empty() && !s.b.contains(r)) return "condition 3: " + m.str() + " restricts to " + r.str();
    }
  }
  auto body = [&](Subset m) {
    return std::any_of(firsts.begin(), firsts.end(), [&](Subset f) { return f.subset_of(m); });
  };
  for (Subset x : s.b.sets())
    for (Subset y : s.b.sets())
      if (body(x) && body(y) && !s.b.contains(x | y)) return "condition 2: " + (x | y).str() + " is missing";
  return "";
}

std::string octopus_violation(const OctopusSpec& o, OctopusReading reading) {
  const int n = 1 + std::accumulate(o.leg_lengths.begin(), o.leg_lengths.end(), 0);
  if (o.b.n() != n || o.b.ground() != Subset::full(n)) return "ground set must be the head plus the legs";
  const Subset head = Subset::singleton(1);
  int off = 0;
  for (std::size_t i = 0; i < o.leg_lengths.size(); ++i) {
    const int len = o.leg_lengths[i];
    if (len < 1) return "leg " + std::to_string(i + 1) + " is empty";
    // Leg i in its own order: head, then labels off+2 .. off+len+1.
    std::vector<int> order{1};
    for (int k = 1; k <= len; ++k) order.push_back(1 + off + k);
    auto seg = [&](int a, int c) {
      Subset out;
      for (int k = a; k <= c; ++k) out = out.with(order[k]);
      return out;
    };
    const Subset leg = seg(0, len);
    auto is_leg_interval = [&](Subset m) {
      for (int a = 0; a <= len; ++a)
        for (int c = a; c <= len; ++c)
          if (seg(a, c) == m) return true;
      return false;
    };
    for (int k = 0; k <= len; ++k) {
      if (!o.b.contains(seg(0, k))) return "condition 1: leg " + std::to_string(i + 1) + " misses " + seg(0, k).str();
      const Subset other = reading == OctopusReading::Literal ? seg(k, len) : seg(1, k);
      if (k >= 1 && !o.b.contains(other))
        return "condition 1: leg " + std::to_string(i + 1) + " misses " + other.str();
    }
    for (Subset m : o.b.sets()) {
      if (m.subset_of(leg) && !is_leg_interval(m)) return "condition 1: " + m.str() + " is not an interval of its leg";
      if (m.intersects(leg) && !m.subset_of(leg) && !m.contains(1))
        return "condition 1: " + m.str() + " does not contain the head";
      Subset r = m & leg;
      if (!r.empty() && !o.b.contains(r)) return "condition 3: " + m.str() + " restricts to " + r.str();
    }
    off += len;
  }
  for (Subset x : o.b.sets())
    for (Subset y : o.b.sets())
      if (head.subset_of(x) && head.subset_of(y) && !o.b.contains(x | y)) return "condition 2: " + (x | y).str() + " is missing";
  return "";
}

namespace {

// Per-leg composite: extended complex of the leg onto the nested complex of
// the octopus leg, in local labels (0 is the head). The empty set stands for
// a body set that misses the leg.
std::map<std::string, Subset> leg_map(const BuildingSet& leg) {
  const int l = leg.n();
  IsoConstruction ext = interval_extension(leg);
  IsoConstruction rot = interval_rotation(ext.target);
  if (!ext.map_verified || !rot.map_verified) throw Error(ErrorCode::Internal, "leg pipeline map failed to verify");
  auto finish_local = [&](Subset s) {
    Subset out;
    for (int x : flip_subset(s, l + 1).elements()) out = out.with(x);  // labels 1..l+1, head is 1
    return out;
  };
  std::map<std::string, Subset> out;
  for (const auto& [label, mid] : ext.map) {
    Subset after_rot = rot.map.at(mid.label()).set;
    out[label] = finish_local(after_rot);
  }
  out["{}"] = finish_local(Subset::full(l + 1));
  return out;
}

}  // namespace

SpiderOctopus spider_to_octopus(const SpiderSpec& s) {
  if (auto why = spider_violation(s); !why.empty()) throw Error(ErrorCode::NotSpider, why);
  const int legs = static_cast<int>(s.leg_lengths.size());
  const int n = s.b.n();
  require_size(n + 1, "octopus");
  std::vector<std::map<std::string, Subset>> local(legs);
  std::vector<Subset> leg_span(legs);
  for (int i = 0; i < legs; ++i) {
    const int off = s.leg_offset(i);
    leg_span[i] = Subset::interval(off + 1, off + s.leg_lengths[i]);
    const BuildingSet leg = restriction(s.b, leg_span[i]);
    std::vector<Subset> sets;
    for (Subset m : leg.sets()) sets.push_back(shift(m, -off));
    local[i] = leg_map(BuildingSet::validate(sets, s.leg_lengths[i]));
  }
  // Local octopus label k of leg i (1 = head) to the global label.
  auto globalize = [&](int i, Subset local_set) {
    Subset out;
    for (int k : local_set.elements()) out = out.with(k == 1 ? 1 : k + s.leg_offset(i));
    return out;
  };
  auto leg_of = [&](int v) {
    for (int i = 0; i < legs; ++i)
      if (leg_span[i].contains(v)) return i;
    throw Error(ErrorCode::Internal, "label outside every leg");
  };
  auto local_label = [&](int i, Subset r) {
    return r.empty() ? std::string("{}") : Vertex::member(shift(r, -s.leg_offset(i))).label();
  };

  SpiderOctopus res;
  const SimplicialComplex source = extended_nested_complex(s.b);
  std::vector<Subset> image{Subset::full(n + 1)};
  for (const auto& v : source.vertices()) {
    Subset img;
    if (v.is_design()) {
      int i = leg_of(v.index);
      img = globalize(i, local[i].at(Vertex::design(v.index - s.leg_offset(i)).label()));
    } else {
      bool body = false;
      for (int i = 0; i < legs; ++i)
        if (v.set.contains(leg_span[i].min())) body = true;
      if (body) {
        for (int i = 0; i < legs; ++i) img = img | globalize(i, local[i].at(local_label(i, v.set & leg_span[i])));
      } else {
        int i = leg_of(v.set.min());
        img = globalize(i, local[i].at(local_label(i, v.set)));
      }
    }
    res.map[v.label()] = Vertex::member(img);
    image.push_back(img);
  }
  std::sort(image.begin(), image.end(), CanonicalLess{});
  image.erase(std::unique(image.begin(), image.end()), image.end());
  OctopusSpec& o = res.octopus;
  o.leg_lengths = s.leg_lengths;
  o.b = BuildingSet::validate(image, n + 1);
  for (Subset m : o.b.sets()) {
    if (m.contains(1)) {
      o.body_sets.push_back(m);
      continue;
    }
    bool cup = false;
    for (int i = 0; i < legs; ++i)
      if (m.contains(2 + s.leg_offset(i))) cup = true;
    (cup ? o.suction_cup_sets : o.leg_sets).push_back(m);
  }
  res.literal_violation = octopus_violation(o, OctopusReading::Literal);
  res.suction_cup_violation = octopus_violation(o, OctopusReading::SuctionCup);
  const SimplicialComplex target = nested_complex(o.b);
  res.map_verified = check_map(source, target, res.map);
  res.isomorphic = is_isomorphic(source, target);
  return res;
}

bool check_map(const SimplicialComplex& source, const SimplicialComplex& target, const VertexMap& map) {
  return verify_vertex_map(source, target, map);
}

VertexMap compose(const VertexMap& first, const VertexMap& second) {
  VertexMap out;
  for (const auto& [k, v] : first) {
    auto it = second.find(v.label());
    if (it == second.end()) throw Error(ErrorCode::InvalidArgument, "compose: " + v.label() + " has no image");
    out[k] = it->second;
  }
  return out;
}

VertexMap inverse(const VertexMap& m) {
  VertexMap out;
  for (const auto& [k, v] : m) {
    if (!out.emplace(v.label(), Vertex::parse(k)).second)
      throw Error(ErrorCode::InvalidArgument, "inverse: map is not injective at " + v.label());
  }
  return out;
}

}  // namespace nesto
