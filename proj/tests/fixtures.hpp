#pragma once

#include <initializer_list>
#include <vector>

#include "nesto/building_set.hpp"
#include "nesto/instances.hpp"
#include "nesto/polynomial.hpp"
#include "oracle.hpp"

namespace fx {

inline nesto::Subset S(std::initializer_list<int> e) { return nesto::Subset::of(e); }

inline nesto::BuildingSet bs(int n, std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<nesto::Subset> v;
  for (auto s : sets) v.push_back(nesto::Subset::of(s));
  return nesto::BuildingSet::validate(v, n);
}

inline nesto::BuildingSet K(int n) { return nesto::from_graph(nesto::complete_graph(n)); }
inline nesto::BuildingSet P(int n) { return nesto::from_graph(nesto::path_graph(n)); }

inline oracle::Family family(const nesto::BuildingSet& b) {
  oracle::Family f;
  for (nesto::Subset s : b.sets()) f.push_back(s.bits());
  return f;
}

inline oracle::Poly coeffs(const nesto::IntPolynomial& p) { return p.coeffs(); }

// The example with two stacked members on [3].
inline nesto::BuildingSet stacked() { return bs(3, {{1}, {2}, {3}, {1, 2}, {1, 2, 3}}); }
// Building set that is not graphical.
inline nesto::BuildingSet not_graphical() { return bs(4, {{1}, {2}, {3}, {4}, {1, 2}, {2, 3}, {1, 3}, {1, 2, 3}, {1, 2, 3, 4}}); }

}  // namespace fx
