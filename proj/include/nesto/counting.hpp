#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nesto/building_set.hpp"
#include "nesto/complex.hpp"
#include "nesto/polynomial.hpp"

namespace nesto {

// Face counts by cardinality, the empty face included: coefficient i is the
// number of faces with i vertices.
IntPolynomial f_poly_enum(const SimplicialComplex& c);
// f-polynomial of the simple polytope dual to a pure complex whose facets
// have d vertices: t^d f_c(1/t).
IntPolynomial f_of_dual(const SimplicialComplex& c, int d);

// h(t) = f(t - 1)
IntPolynomial h_poly(const IntPolynomial& f);
// h = sum gamma_i t^i (1+t)^(d-2i); throws NotSymmetric.
IntPolynomial gamma_poly(const IntPolynomial& h, int d);

// Polytope dimensions: n - |B_max| for P(b), n for the extended polytope.
int nestohedron_dim(const BuildingSet& b);

// Enumeration-based values (through the explicit complexes).
IntPolynomial f_nestohedron_enum(const BuildingSet& b);
IntPolynomial f_extended_enum(const BuildingSet& b);

// Recursive values, memoized per thread on the canonical key.
IntPolynomial f_nested_recursive(const BuildingSet& b);     // f of N(b)
IntPolynomial f_nestohedron_recursive(const BuildingSet& b);  // f of P(b)
// form 1: sum (t+1)^(n-|S|) f_P(b|S); form 2: sum (t+1)^|(b|S)max| f_P(b|S)
IntPolynomial f_extended_recursive(const BuildingSet& b, int form);
IntPolynomial h_nestohedron(const BuildingSet& b);
IntPolynomial h_extended_recursive(const BuildingSet& b);
IntPolynomial gamma_nestohedron(const BuildingSet& b);
IntPolynomial gamma_extended(const BuildingSet& b);

void clear_counting_cache();

struct IdentityResult {
  std::string name;
  bool holds = false;
  // Informational entries document printed variants and do not enter `ok`.
  bool informational = false;
  std::string detail;
};

struct IdentityReport {
  bool ok = true;
  std::vector<IdentityResult> results;
  const IdentityResult* first_failure() const;
};

// The inverse relations, the design-free recursion and both h-recursions.
IdentityReport inverse_relations_check(const BuildingSet& b);

std::int64_t a_number(const BuildingSet& b);
std::int64_t b_number(const BuildingSet& b);
RationalInT a_rational(const BuildingSet& b);
RationalInT b_rational(const BuildingSet& b);
bool is_even(const BuildingSet& b);
bool is_odd(const BuildingSet& b);
// Number identities and the rational-function identities.
IdentityReport ab_identities_check(const BuildingSet& b);

struct ForestLineGraphResult {
  bool equal = false;
  IntPolynomial forest_side;     // f of P(B_G)
  IntPolynomial line_graph_side; // f of the extended polytope of B_L(G)
  int line_vertices = 0;
  std::vector<std::pair<int, int>> line_edges;
};
// Vertices 1..n, undirected edges; throws NotAForest.
ForestLineGraphResult forest_linegraph_equal(int n, const std::vector<std::pair<int, int>>& edges);

struct GammaShavingResult {
  bool holds_restricted_prime = false;  // uses b'|_I and b'/I
  bool holds_restricted = false;        // uses b|_I and b/I
  IntPolynomial lhs, rhs;
};
// b' = b with i added; both flag and connected. Throws NotFlag / NotConnected.
GammaShavingResult gamma_shaving_check(const BuildingSet& b, const BuildingSet& b_prime, Subset i);

}  // namespace nesto
