#include "nesto/counting.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "nesto/error.hpp"

namespace nesto {

namespace {

using Poly = IntPolynomial;

enum class Memo { FN, FP, FPSquare, FPEnum, FPSquareEnum, ANum, BNum };

thread_local std::map<std::pair<Memo, std::vector<Mask>>, Poly> memo;

Poly memoized(Memo tag, const BuildingSet& b, const std::function<Poly()>& compute) {
  auto key = std::make_pair(tag, canonical_key(b));
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Poly value = compute();
  memo.emplace(std::move(key), value);
  return value;
}

Poly t_pow(int k) { return Poly::monomial(1, k); }
Poly one_plus_t(int k) { return Poly::binomial_power(1, 1, k); }

int num_max(const BuildingSet& b, Subset s) { return static_cast<int>(maximal_elements(b, s).size()); }

template <typename F>
void each_subset(const BuildingSet& b, F&& f) {
  for_each_submask(b.ground(), [&](Subset s) { f(s, restriction(b, s)); });
}

// Enumerated f of P(b) and of the extended polytope, memoized.
Poly fp_enum(const BuildingSet& b) {
  return memoized(Memo::FPEnum, b, [&] { return f_nestohedron_enum(b); });
}
Poly fpsq_enum(const BuildingSet& b) {
  return memoized(Memo::FPSquareEnum, b, [&] { return f_extended_enum(b); });
}
Poly fn_enum(const BuildingSet& b) { return f_poly_enum(nested_complex(b)); }

IdentityResult compare(std::string name, const Poly& lhs, const Poly& rhs, bool informational = false) {
  IdentityResult r;
  r.name = std::move(name);
  r.holds = lhs == rhs;
  r.informational = informational;
  r.detail = "lhs=" + lhs.str() + " rhs=" + rhs.str();
  return r;
}

void add(IdentityReport& rep, IdentityResult r) {
  if (!r.holds && !r.informational) rep.ok = false;
  rep.results.push_back(std::move(r));
}

}  // namespace

IntPolynomial f_poly_enum(const SimplicialComplex& c) {
  std::vector<std::int64_t> counts;
  for (const auto& f : c.all_faces()) {
    if (counts.size() <= f.size()) counts.resize(f.size() + 1, 0);
    ++counts[f.size()];
  }
  return Poly(counts);
}

IntPolynomial f_of_dual(const SimplicialComplex& c, int d) {
  if (!c.is_pure() || c.facet_size() != d)
    throw Error(ErrorCode::NotPure, "facets must all have " + std::to_string(d) + " vertices");
  return f_poly_enum(c).reversed(d);
}

IntPolynomial h_poly(const IntPolynomial& f) { return f.compose_shift(-1); }

IntPolynomial gamma_poly(const IntPolynomial& h, int d) {
  if (h.degree() > d || !h.palindromic(d)) throw Error(ErrorCode::NotSymmetric, h.str());
  Poly rest = h;
  std::vector<std::int64_t> g;
  for (int i = 0; 2 * i <= d; ++i) {
    std::int64_t c = rest.coeff(i);
    g.push_back(c);
    rest -= one_plus_t(d - 2 * i).times_monomial(c, i);
  }
  if (!rest.is_zero()) throw Error(ErrorCode::NotSymmetric, h.str());
  return Poly(g);
}

int nestohedron_dim(const BuildingSet& b) { return b.rank() - static_cast<int>(maximal_elements(b).size()); }

IntPolynomial f_nestohedron_enum(const BuildingSet& b) { return f_of_dual(nested_complex(b), nestohedron_dim(b)); }

IntPolynomial f_extended_enum(const BuildingSet& b) { return f_of_dual(extended_nested_complex(b), b.rank()); }

IntPolynomial f_nested_recursive(const BuildingSet& b) {
  if (b.empty()) return Poly::constant(1);
  return memoized(Memo::FN, b, [&] {
    auto maxima = maximal_elements(b);
    Poly sum;
    for_each_submask(b.ground(), [&](Subset s) {
      for (Subset m : maxima)
        if ((s & m) == m) return;
      BuildingSet r = restriction(b, s);
      sum += f_nested_recursive(r).times_monomial(1, num_max(b, s));
    });
    return sum;
  });
}

IntPolynomial f_nestohedron_recursive(const BuildingSet& b) {
  if (b.empty()) return Poly::constant(1);
  return memoized(Memo::FP, b, [&] {
    auto comps = connected_components(b);
    if (comps.size() > 1) {
      Poly prod = Poly::constant(1);
      for (const auto& c : comps) prod = prod * f_nestohedron_recursive(c);
      return prod;
    }
    Poly sum;
    const int n = b.rank();
    for_each_submask(b.ground(), [&](Subset s) {
      if (s == b.ground()) return;
      sum += f_nestohedron_recursive(restriction(b, s)).times_monomial(1, n - s.size() - 1);
    });
    return sum;
  });
}

IntPolynomial f_extended_recursive(const BuildingSet& b, int form) {
  if (form != 1 && form != 2) throw Error(ErrorCode::InvalidArgument, "form must be 1 or 2");
  const int n = b.rank();
  Poly sum;
  each_subset(b, [&](Subset s, const BuildingSet& r) {
    int e = form == 1 ? n - s.size() : num_max(b, s);
    sum += one_plus_t(e) * f_nestohedron_recursive(r);
  });
  return sum;
}

IntPolynomial h_nestohedron(const BuildingSet& b) { return h_poly(f_nestohedron_recursive(b)); }

IntPolynomial h_extended_recursive(const BuildingSet& b) {
  const int n = b.rank();
  Poly sum;
  each_subset(b, [&](Subset s, const BuildingSet& r) { sum += h_nestohedron(r).times_monomial(1, n - s.size()); });
  return sum;
}

IntPolynomial gamma_nestohedron(const BuildingSet& b) { return gamma_poly(h_nestohedron(b), nestohedron_dim(b)); }

IntPolynomial gamma_extended(const BuildingSet& b) { return gamma_poly(h_extended_recursive(b), b.rank()); }

void clear_counting_cache() { memo.clear(); }

const IdentityResult* IdentityReport::first_failure() const {
  for (const auto& r : results)
    if (!r.holds && !r.informational) return &r;
  return nullptr;
}

IdentityReport inverse_relations_check(const BuildingSet& b) {
  IdentityReport rep;
  const int n = b.rank();
  const int bmax = static_cast<int>(maximal_elements(b).size());
  const Poly fp = fp_enum(b);
  const Poly fn = fn_enum(b);
  const Poly minus_t_minus_1 = Poly({-1, -1});

  Poly inv1, inv2, des_free, des_free_dual, h_rec, h_rec_literal, hsq_rec, hsq_inner, hsq_literal;
  const Poly hp = h_poly(fp);
  const Poly hpsq = h_poly(fpsq_enum(b));
  each_subset(b, [&](Subset s, const BuildingSet& r) {
    const int k = n - s.size();
    const int inner = num_max(b, s);
    const Poly fpsq_s = fpsq_enum(r);
    const Poly fp_s = fp_enum(r);
    const Poly hp_s = h_poly(fp_s);
    const Poly hpsq_s = h_poly(fpsq_s);
    const std::int64_t sign = k % 2 ? -1 : 1;
    inv1 += minus_t_minus_1.pow(k) * fpsq_s;
    inv2 += fpsq_s.times_monomial(sign, 0);
    des_free += fn_enum(r).times_monomial(1, inner);
    des_free_dual += fp_s.times_monomial(1, k);
    h_rec += (t_pow(k) - t_pow(inner)) * hp_s;
    h_rec_literal += (t_pow(k) - t_pow(inner)) * hp;
    hsq_rec += (t_pow(k + bmax) - t_pow(0)) * hpsq_s.times_monomial(sign, 0);
    hsq_inner += (t_pow(k + inner) - t_pow(0)) * hpsq_s.times_monomial(sign, 0);
    hsq_literal += (t_pow(k + inner) - t_pow(0)) * hpsq.times_monomial(sign, 0);
  });
  add(rep, compare("f_P_from_extended_alternating", fp, inv1));
  add(rep, compare("f_P_times_max_from_extended", one_plus_t(bmax) * fp, inv2));
  add(rep, compare("f_N_design_free_recursion", fn * one_plus_t(bmax), des_free));
  add(rep, compare("f_P_design_free_recursion", fp * one_plus_t(bmax), des_free_dual));
  add(rep, compare("h_P_recursion", h_rec, Poly{}));
  add(rep, compare("h_P_recursion_scalar_literal", h_rec_literal, Poly{}, true));
  add(rep, compare("h_extended_recursion", hsq_rec, Poly{}));
  add(rep, compare("h_extended_recursion_inner_max", hsq_inner, Poly{}, true));
  add(rep, compare("h_extended_recursion_scalar_literal", hsq_literal, Poly{}, true));
  add(rep, compare("f_N_recursive_vs_enum", f_nested_recursive(b), fn));
  add(rep, compare("f_P_recursive_vs_enum", f_nestohedron_recursive(b), fp));
  add(rep, compare("f_extended_form1_vs_enum", f_extended_recursive(b, 1), fpsq_enum(b)));
  add(rep, compare("f_extended_form2_vs_enum", f_extended_recursive(b, 2), fpsq_enum(b)));
  add(rep, compare("h_extended_recursive_vs_enum", h_extended_recursive(b), hpsq));
  return rep;
}

bool is_even(const BuildingSet& b) {
  for (Subset m : maximal_elements(b))
    if (m.size() % 2) return false;
  return true;
}

bool is_odd(const BuildingSet& b) {
  for (Subset m : maximal_elements(b))
    if (m.size() % 2 == 0) return false;
  return true;
}

namespace {

std::int64_t ab_number(const BuildingSet& b, bool a) {
  if (b.empty()) return 1;
  if (a ? !is_even(b) : !is_odd(b)) return 0;
  Poly v = memoized(a ? Memo::ANum : Memo::BNum, b, [&] {
    std::int64_t sum = 0;
    for_each_submask(b.ground(), [&](Subset s) {
      if (s != b.ground()) sum = checked_add(sum, ab_number(restriction(b, s), a));
    });
    return Poly::constant(-sum);
  });
  return v.coeff(0);
}

}  // namespace

std::int64_t a_number(const BuildingSet& b) { return ab_number(b, true); }
std::int64_t b_number(const BuildingSet& b) { return ab_number(b, false); }

RationalInT a_rational(const BuildingSet& b) {
  const int n = b.rank();
  return {h_extended_recursive(b), n % 2 ? -1 : 1, n};
}

RationalInT b_rational(const BuildingSet& b) { return {h_nestohedron(b), 1, b.rank()}; }

IdentityReport ab_identities_check(const BuildingSet& b) {
  IdentityReport rep;
  const int n = b.rank();
  const int bmax = static_cast<int>(maximal_elements(b).size());
  const std::int64_t sign_n = n % 2 ? -1 : 1;
  const Poly hpsq = h_poly(fpsq_enum(b));
  const Poly hp = h_poly(fp_enum(b));

  add(rep, compare("a_number_matches_h", Poly::constant(a_number(b)), Poly::constant(hpsq.eval(-1))));
  add(rep, compare("b_number_matches_h", Poly::constant(b_number(b)), Poly::constant(sign_n * hp.eval(-1))));
  if (!is_even(b)) add(rep, compare("a_vanishes_off_even", Poly::constant(a_number(b)), Poly{}));
  if (!is_odd(b)) add(rep, compare("b_vanishes_off_odd", Poly::constant(b_number(b)), Poly{}));

  // Every term is multiplied through by t^n.
  Poly a_rec, a_rec_literal, b_rec, a_from_b, b_from_a;
  each_subset(b, [&](Subset s, const BuildingSet& r) {
    const int inner = num_max(b, s);
    const RationalInT as = a_rational(r);
    const RationalInT bs = b_rational(r);
    a_rec += (t_pow(n + bmax) - t_pow(s.size())) * as.scaled_to(n);
    a_rec_literal += (t_pow(n + inner) - t_pow(s.size())) * as.scaled_to(n);
    b_rec += (t_pow(n) - t_pow(s.size() + inner)) * bs.scaled_to(n);
    a_from_b += bs.scaled_to(n).times_monomial(sign_n, 0);
    b_from_a += as.scaled_to(n).times_monomial(sign_n, 0);
  });
  add(rep, compare("a_rational_recursion", a_rec, Poly{}));
  add(rep, compare("a_rational_recursion_inner_max", a_rec_literal, Poly{}, true));
  add(rep, compare("b_rational_recursion", b_rec, Poly{}));
  add(rep, compare("a_from_b", a_rational(b).scaled_to(n), a_from_b));
  add(rep, compare("b_from_a", b_rational(b).scaled_to(n), b_from_a));
  return rep;
}

ForestLineGraphResult forest_linegraph_equal(int n, const std::vector<std::pair<int, int>>& edges) {
  require_size(n, "forest");
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [u, v] : edges) {
    if (u < 1 || v < 1 || u > n || v > n || u == v)
      throw Error(ErrorCode::NotAForest, "bad edge " + std::to_string(u) + "-" + std::to_string(v));
    int ru = find(u), rv = find(v);
    if (ru == rv) throw Error(ErrorCode::NotAForest, "cycle through edge " + std::to_string(u) + "-" + std::to_string(v));
    parent[ru] = rv;
  }
  ForestLineGraphResult res;
  const int m = static_cast<int>(edges.size());
  res.line_vertices = m;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) res.line_edges.emplace_back(i + 1, j + 1);
    }
  BuildingSet bg = from_graph(DirectedGraph::undirected(n, edges));
  BuildingSet bl = m == 0 ? BuildingSet::trusted(0, Subset{}, {}) : from_graph(DirectedGraph::undirected(m, res.line_edges));
  res.forest_side = f_nestohedron_enum(bg);
  res.line_graph_side = f_extended_enum(bl);
  res.equal = res.forest_side == res.line_graph_side;
  return res;
}

namespace {

Poly gamma_ext_enum(const BuildingSet& b) { return gamma_poly(h_poly(fpsq_enum(b)), b.rank()); }
Poly gamma_p_enum(const BuildingSet& b) { return gamma_poly(h_poly(fp_enum(b)), nestohedron_dim(b)); }

}  // namespace

GammaShavingResult gamma_shaving_check(const BuildingSet& b, const BuildingSet& bp, Subset i) {
  if (b.ground() != bp.ground() || b.contains(i) || !bp.contains(i) || bp.size() != b.size() + 1)
    throw Error(ErrorCode::InvalidArgument, "b_prime must be b with " + i.str() + " added");
  for (Subset s : b.sets())
    if (!bp.contains(s)) throw Error(ErrorCode::InvalidArgument, "b_prime must contain b");
  for (const BuildingSet* x : {&b, &bp}) {
    if (!is_connected(*x)) throw Error(ErrorCode::NotConnected, "shaving needs connected building sets");
    if (!is_flag(*x)) throw Error(ErrorCode::NotFlag, "shaving needs flag building sets");
  }
  GammaShavingResult r;
  r.lhs = gamma_ext_enum(bp);
  const Poly base = gamma_ext_enum(b);
  r.rhs = base + (gamma_p_enum(restriction(bp, i)) * gamma_ext_enum(contraction(bp, i))).times_monomial(1, 1);
  const Poly rhs2 = base + (gamma_p_enum(restriction(b, i)) * gamma_ext_enum(contraction(b, i))).times_monomial(1, 1);
  r.holds_restricted_prime = r.lhs == r.rhs;
  r.holds_restricted = r.lhs == rhs2;
  return r;
}

}  // namespace nesto
