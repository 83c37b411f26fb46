#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nesto/building_set.hpp"
#include "nesto/complex.hpp"
#include "nesto/polynomial.hpp"

namespace nesto {

using Word = std::vector<int>;

// Rooted forest on a node subset of [n]; parent[i] == 0 marks a root or a
// non-node. Index 0 of `parent` is unused.
struct RootedForest {
  int n = 0;
  Subset nodes;
  std::vector<int> parent;

  static RootedForest empty(int n);
  // Throws NotAForest on cycles or parents outside the node set.
  static RootedForest from_parents(int n, Subset nodes, const std::vector<std::pair<int, int>>& child_parent);

  std::vector<int> roots() const;
  std::vector<int> children(int i) const;
  Subset descendants(int i) const;  // F_{<=i}
  bool comparable(int i, int j) const;
  // (child, parent) pairs with child > parent.
  std::vector<std::pair<int, int>> descents() const;
  int des() const { return static_cast<int>(descents().size()); }
  std::string dot() const;

  bool operator==(const RootedForest&) const = default;
};

// Throws ForestConditionViolated naming F1, F2 or F3.
void validate_forest(const BuildingSet& b, const RootedForest& f);
bool is_extended_forest(const BuildingSet& b, const RootedForest& f);
ExtendedFace forest_to_nested(const BuildingSet& b, const RootedForest& f);
// Throws NotMaximal when the face is not a facet.
RootedForest nested_to_forest(const BuildingSet& b, const ExtendedFace& face);
std::vector<RootedForest> extended_forests(const BuildingSet& b);

RootedForest psi_square(const BuildingSet& b, const Word& w);

// Definition predicate: each entry shares a component of b restricted to the
// prefix with the running maximum.
bool is_b_partial(const BuildingSet& b, const Word& w);
// Words produced by the backward picking procedure, over every S.
std::vector<Word> b_partial_permutations(const BuildingSet& b);
std::vector<Word> all_partial_permutations(int n);

Word lex_min_extension(const RootedForest& f);        // backward peeling
Word lex_min_extension_greedy(const RootedForest& f); // minimal leaf first

Word phi(const Word& w, int n);
std::vector<Word> extended_b_permutations(const BuildingSet& b);
// Membership in the image of phi over b-partial permutations.
bool is_extended_b_permutation(const BuildingSet& b, const Word& w);

std::vector<std::pair<int, int>> word_descents(const Word& w);  // value pairs
int des(const Word& w);
std::vector<std::pair<int, int>> inversions(const Word& w);     // (larger, smaller)

enum class Topo { Peak, Valley, AscentIntermediary, DescentIntermediary };
// Classification of each entry with w(0) = w(m+1) = 0.
std::vector<Topo> topography(const Word& w);
bool has_final_descent(const Word& w);
int double_descents(const Word& w);
const char* topo_name(Topo t);

bool is_intermediary(const Word& w, int a);
// Range of admissible leap counts: left leaps are negative.
std::pair<int, int> leap_range(const Word& w, int a);
Word leap(const Word& w, int a, int r);
// Minimal leap in the mandated direction staying inside the extended
// b-permutations; returns the word and the signed leap count.
std::pair<Word, int> hop_with_count(const BuildingSet& b, const Word& w, int a);
Word hop(const BuildingSet& b, const Word& w, int a);

struct DescentGammaReport {
  IntPolynomial h_descents;
  IntPolynomial gamma_descents;
  IntPolynomial h_counting;
  IntPolynomial gamma_counting;
  bool h_equal = false;
  bool gamma_equal = false;
  // Per hop class: sum t^des equals t^des(w)(1+t)^(n-2des(w)).
  bool class_identity_plus = false;
  // Same identity with (t-1).
  bool class_identity_minus = false;
  bool unique_representative = false;  // one word per class without descent-intermediaries
  bool hops_involutive = false;
  bool hops_commute = false;
  bool hops_odd = false;
  int num_classes = 0;
};
// Requires b connected and chordal.
DescentGammaReport gamma_via_descents(const BuildingSet& b);
IntPolynomial h_via_descents(const BuildingSet& b);

}  // namespace nesto
