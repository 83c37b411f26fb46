#include <doctest.h>

#include "fixtures.hpp"
#include "nesto/complex.hpp"
#include "nesto/counting.hpp"
#include "nesto/error.hpp"

using namespace nesto;
using fx::S;

namespace {

IntPolynomial poly(std::vector<std::int64_t> c) { return IntPolynomial(std::move(c)); }

std::vector<Instance> small_family() {
  auto family = graphical_family(4, 4);
  for (const auto& in : random_family(40, 5, 9)) family.push_back(in);
  family.push_back({"stacked", fx::stacked()});
  family.push_back({"not graphical", fx::not_graphical()});
  return family;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  IntPolynomial p = poly({1, 2});
  CHECK((p * p).coeffs() == std::vector<std::int64_t>{1, 4, 4});
  CHECK(IntPolynomial::binomial_power(1, 1, 3).coeffs() == std::vector<std::int64_t>{1, 3, 3, 1});
  CHECK(poly({6, 6, 1}).compose_shift(-1).coeffs() == std::vector<std::int64_t>{1, 4, 1});
  CHECK(poly({0, 0}).is_zero());
  CHECK(poly({1, 3, 1}).str() == "[1,3,1]");
  CHECK(poly({1, 3, 1}).eval(-1) == -1);
  CHECK_THROWS_AS(IntPolynomial::monomial(INT64_MAX, 0) + IntPolynomial::monomial(1, 0), Error);
}

TEST_CASE("f, h and gamma of the hexagon and the pentagon") {
  SimplicialComplex hex = nested_complex(fx::K(3));
  CHECK(f_of_dual(hex, 2) == poly({6, 6, 1}));
  CHECK(h_poly(poly({6, 6, 1})) == poly({1, 4, 1}));
  SimplicialComplex pent = extended_nested_complex(fx::K(2));
  CHECK(f_of_dual(pent, 2) == poly({5, 5, 1}));
  CHECK(h_poly(poly({5, 5, 1})) == poly({1, 3, 1}));
  CHECK(gamma_poly(poly({1, 3, 1}), 2) == poly({1, 1}));
  CHECK(gamma_poly(IntPolynomial::binomial_power(1, 1, 4), 4) == poly({1}));
  CHECK_THROWS_AS(gamma_poly(poly({1, 2}), 2), Error);
  CHECK(f_nestohedron_recursive(fx::bs(1, {{1}})) == poly({1}));
}

TEST_CASE("recursive values of named sets") {
  CHECK(f_nestohedron_recursive(fx::K(3)) == poly({6, 6, 1}));
  CHECK(f_nestohedron_recursive(fx::P(4)).coeff(0) == 14);
  CHECK(h_extended_recursive(fx::K(2)) == poly({1, 3, 1}));
  CHECK(h_extended_recursive(fx::K(3)).eval(1) == 16);
  CHECK(f_extended_recursive(fx::K(2), 1) == f_extended_recursive(fx::K(2), 2));
}

TEST_CASE("recursions agree with brute-force face counts") {
  for (const auto& in : small_family()) {
    const BuildingSet& b = in.b;
    oracle::Family fam = fx::family(b);
    const int d = b.rank() - oracle::count_maxima(fam);
    oracle::Poly f_p = oracle::trim(oracle::polytope_f(oracle::enumerate(b.n(), fam, false), d));
    oracle::Poly f_ext = oracle::trim(oracle::polytope_f(oracle::enumerate(b.n(), fam, true), b.rank()));
    CHECK_MESSAGE(fx::coeffs(f_nestohedron_recursive(b)) == f_p, in.name);
    CHECK_MESSAGE(fx::coeffs(f_nestohedron_enum(b)) == f_p, in.name);
    CHECK_MESSAGE(fx::coeffs(f_extended_recursive(b, 1)) == f_ext, in.name);
    CHECK_MESSAGE(fx::coeffs(f_extended_recursive(b, 2)) == f_ext, in.name);
    CHECK_MESSAGE(fx::coeffs(f_extended_enum(b)) == f_ext, in.name);
    CHECK_MESSAGE(fx::coeffs(h_extended_recursive(b)) == oracle::h_from_f(f_ext), in.name);
    CHECK_MESSAGE(fx::coeffs(h_nestohedron(b)) == oracle::h_from_f(f_p), in.name);

    oracle::Complex nc = oracle::enumerate(b.n(), fam, false);
    oracle::Poly by_size(b.rank() + 1, 0);
    for (const auto& face : nc.faces) ++by_size[face.size()];
    CHECK_MESSAGE(fx::coeffs(f_nested_recursive(b)) == oracle::trim(by_size), in.name);

    IdentityReport rep = inverse_relations_check(b);
    CHECK_MESSAGE(rep.ok, in.name);
  }
}

TEST_CASE("h is palindromic and gamma matches the brute-force expansion") {
  for (const auto& in : small_family()) {
    IntPolynomial h = h_extended_recursive(in.b);
    CHECK(h.palindromic(in.b.rank()));
    CHECK(h_nestohedron(in.b).palindromic(nestohedron_dim(in.b)));
    CHECK(fx::coeffs(gamma_extended(in.b)) == oracle::gamma_from_h(h.coeffs(), in.b.rank()));
    if (is_flag(in.b)) CHECK_MESSAGE(gamma_extended(in.b).nonnegative(), in.name);
  }
}

TEST_CASE("a and b numbers") {
  BuildingSet point = fx::bs(1, {{1}});
  CHECK(a_number(point) == 0);
  CHECK(b_number(point) == -1);
  BuildingSet none = BuildingSet::validate(std::vector<Subset>{}, 0);
  CHECK(a_number(none) == 1);
  CHECK(b_number(none) == 1);
  CHECK(a_number(fx::K(2)) == -1);
  for (const auto& in : small_family()) {
    const BuildingSet& b = in.b;
    CHECK(a_number(b) == h_extended_recursive(b).eval(-1));
    std::int64_t sign = b.rank() % 2 ? -1 : 1;
    CHECK(b_number(b) == sign * h_nestohedron(b).eval(-1));
    if (!is_even(b)) CHECK(a_number(b) == 0);
    if (!is_odd(b)) CHECK(b_number(b) == 0);
    CHECK_MESSAGE(ab_identities_check(b).ok, in.name);
  }
}

TEST_CASE("forest and line graph") {
  auto p3 = forest_linegraph_equal(3, {{1, 2}, {2, 3}});
  CHECK(p3.equal);
  CHECK(p3.forest_side == poly({5, 5, 1}));
  CHECK(p3.line_vertices == 2);
  auto edge = forest_linegraph_equal(2, {{1, 2}});
  CHECK(edge.equal);
  CHECK(edge.forest_side == poly({2, 1}));
  auto claw = forest_linegraph_equal(4, {{1, 2}, {1, 3}, {1, 4}});
  CHECK(claw.equal);
  CHECK(claw.forest_side.degree() == 3);
  CHECK_THROWS_AS(forest_linegraph_equal(3, {{1, 2}, {2, 3}, {1, 3}}), Error);
  for (const auto& [v, edges] : forests_up_to(5)) CHECK(forest_linegraph_equal(v, edges).equal);
}

TEST_CASE("forest census") {
  std::vector<int> counts(7, 0);
  for (const auto& [v, edges] : forests_up_to(6)) ++counts[edges.size()];
  CHECK(counts == std::vector<int>{0, 1, 2, 4, 8, 16, 34});
}

TEST_CASE("gamma shaving") {
  BuildingSet b = fx::stacked();
  BuildingSet bp = fx::bs(3, {{1}, {2}, {3}, {1, 2}, {2, 3}, {1, 2, 3}});
  GammaShavingResult r = gamma_shaving_check(b, bp, S({2, 3}));
  CHECK(r.holds_restricted_prime);
  CHECK(r.holds_restricted);
  CHECK_THROWS_AS(gamma_shaving_check(fx::bs(3, {{1}, {2}, {3}, {1, 2, 3}}), fx::stacked(), S({1, 2})), Error);

  int sweeps = 0;
  for (const auto& in : graphical_family(4, 0)) {
    const BuildingSet& big = in.b;
    if (!is_connected(big)) continue;
    for (Subset i : big.sets()) {
      if (i.size() < 2 || i == big.ground()) continue;
      std::vector<Subset> rest;
      for (Subset s : big.sets())
        if (s != i) rest.push_back(s);
      BuildingSet small;
      try {
        small = BuildingSet::validate(rest, big.n());
      } catch (const Error&) {
        continue;
      }
      if (!is_flag(small)) continue;
      GammaShavingResult g = gamma_shaving_check(small, big, i);
      CHECK_MESSAGE(g.holds_restricted_prime, in.name << " minus " << i.str());
      CHECK_MESSAGE(g.holds_restricted, in.name << " minus " << i.str());
      ++sweeps;
    }
  }
  CHECK(sweeps > 0);
}
