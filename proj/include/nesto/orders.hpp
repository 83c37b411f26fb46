#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "nesto/building_set.hpp"
#include "nesto/complex.hpp"
#include "nesto/perms.hpp"

namespace nesto {

// Finite poset on 0..size-1 with precomputed up- and down-sets.
class Poset {
 public:
  Poset() = default;
  // leq must be a partial order; it is evaluated on every ordered pair.
  static Poset from_order(std::vector<std::string> labels, const std::function<bool(int, int)>& leq);
  // Reflexive-transitive closure of the given relation; throws InvalidArgument on cycles.
  static Poset from_relation(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& less);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool leq(int x, int y) const { return up_[x].test(y); }
  bool less(int x, int y) const { return x != y && leq(x, y); }
  const boost::dynamic_bitset<>& up(int x) const { return up_[x]; }
  const boost::dynamic_bitset<>& down(int x) const { return down_[x]; }
  // Transitive reduction, sorted.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  std::vector<int> minimal() const;
  std::vector<int> maximal() const;
  Poset dual() const;
  std::string dot() const;

 private:
  void finish();
  std::vector<std::string> labels_;
  std::vector<boost::dynamic_bitset<>> up_, down_;
  std::vector<std::pair<int, int>> covers_;
};

// Weak order on S_m by inversion-set containment.
Poset weak_order(int m, std::vector<Word>* elements = nullptr);
// Partial weak order on partial permutations of [n] (or b-partial ones when
// b is given): pi <= sigma iff inv(phi(pi)) is contained in inv(phi(sigma)).
Poset partial_weak_order(int n, const BuildingSet* b = nullptr, std::vector<Word>* elements = nullptr);

struct LatticeReport {
  bool is_lattice = true;
  int x = -1, y = -1;  // first pair without meet or join
  bool missing_meet = false;
};
std::optional<int> meet(const Poset& p, int x, int y);
std::optional<int> join(const Poset& p, int x, int y);
LatticeReport lattice_check(const Poset& p);
// Throws NotComparable when u is not below v.
std::int64_t moebius(const Poset& p, int u, int v);
// mu(u, .) for every element above u.
std::vector<std::int64_t> moebius_row(const Poset& p, int u);

std::optional<std::vector<int>> find_poset_isomorphism(const Poset& a, const Poset& b);
// Checks map is a bijection with x <= y iff map[x] <= map[y].
bool verify_poset_map(const Poset& a, const Poset& b, const std::vector<int>& map);

std::vector<int> random_linear_extension(const Poset& p, std::mt19937_64& rng);
bool is_linear_extension(const Poset& p, const std::vector<int>& order);

// Flip posets on maximal (extended) nested collections, elements in the order
// of `facets` (canonical facet order when left empty).
struct FlipPoset {
  Poset poset;
  std::vector<ExtendedFace> facets;
  std::vector<std::pair<int, int>> flips;  // oriented flip edges
  bool acyclic = false;
};
FlipPoset flip_poset(const BuildingSet& b, bool extended);

// Unique element of I outside every smaller member of the collection.
int top_element(const std::vector<Subset>& collection, Subset i);

// Maximal extended nested collection labeled by a partial permutation.
ExtendedFace facet_of_partial_permutation(const BuildingSet& b, const Word& w);

struct ShellingReport {
  bool ok = true;
  int i = -1, j = -1;  // positions in the order
};
// Throws NotPure; order lists facet indices of c.
ShellingReport verify_shelling(const SimplicialComplex& c, const std::vector<int>& order);

}  // namespace nesto
