#pragma once

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "domlex/catalog.hpp"
#include "domlex/closed_forms.hpp"
#include "domlex/domination.hpp"
#include "domlex/graph.hpp"
#include "domlex/isomorphism.hpp"
#include "domlex/polynomial.hpp"

namespace domlex {

// One formula-vs-oracle (or bound / isomorphism) comparison. pass is true
// iff the two values are exactly equal, or the stated bound holds.
struct VerificationReport {
  std::string law;
  std::string instance;
  std::string formula_value;
  std::string oracle_value;
  bool pass = false;
};

struct VerifyOptions {
  std::optional<std::pair<int, int>> m_range;  // law-specific default when unset
  std::optional<std::pair<int, int>> n_range;
  std::optional<int> g_catalog_order;
  std::optional<int> h_catalog_order;
  OracleOptions oracle;
};

namespace detail {

inline std::pair<int, int> range_or(const std::optional<std::pair<int, int>>& r,
                                    int lo, int hi) {
  return r.value_or(std::pair<int, int>{lo, hi});
}

// Operand set for the closed-form laws: the order-<=3 catalog plus P4 and
// C4 by default; a plain order-<=k catalog when a catalog order is given.
inline std::vector<Graph> formula_operands(const VerifyOptions& opts) {
  if (opts.g_catalog_order) return graph_catalog(*opts.g_catalog_order);
  std::vector<Graph> gs = graph_catalog(3);
  gs.push_back(path_graph(4));
  gs.push_back(cycle_graph(4));
  return gs;
}

inline VerificationReport poly_report(std::string law, std::string instance,
                                      const IntPoly& formula, const IntPoly& oracle) {
  return VerificationReport{std::move(law), std::move(instance), to_string(formula),
                            to_string(oracle), formula == oracle};
}

inline VerificationReport graph_equal_report(std::string law, std::string instance,
                                             const Graph& lhs, const Graph& rhs) {
  return VerificationReport{std::move(law), std::move(instance),
                            lhs == rhs ? "equal" : "lhs differs",
                            lhs == rhs ? "equal" : "rhs differs", lhs == rhs};
}

// A lexicographic closed form evaluated over (parameter, operand) pairs.
template <typename LeftGraph, typename Formula>
std::vector<VerificationReport> lex_formula_law(const std::string& law,
                                                const VerifyOptions& opts,
                                                const std::string& param_name,
                                                LeftGraph&& left_graph,
                                                Formula&& formula) {
  std::vector<VerificationReport> reports;
  auto [lo, hi] = range_or(opts.n_range, 1, 3);
  for (int n = lo; n <= hi; ++n) {
    if (n < 1) continue;
    Graph left = left_graph(n);
    for (const Graph& g : formula_operands(opts)) {
      if (left.order() * g.order() > opts.oracle.max_order) continue;
      IntPoly d_g = domination_polynomial(g, opts.oracle);
      IntPoly expected = formula(n, g, d_g);
      IntPoly oracle = domination_polynomial(lexicographic_product(left, g), opts.oracle);
      std::ostringstream inst;
      inst << param_name << "=" << n << ", G=" << describe_graph(g);
      reports.push_back(poly_report(law, inst.str(), expected, oracle));
    }
  }
  return reports;
}

}  // namespace detail

// ---- closed-form laws ------------------------------------------------------

inline std::vector<VerificationReport> verify_union_product(const VerifyOptions& opts = {}) {
  std::vector<VerificationReport> reports;
  auto catalog = graph_catalog(opts.g_catalog_order.value_or(3));
  std::vector<IntPoly> polys;
  polys.reserve(catalog.size());
  for (const Graph& g : catalog) polys.push_back(domination_polynomial(g, opts.oracle));

  auto check = [&](std::span<const std::size_t> idx) {
    Graph whole = catalog[idx[0]];
    std::vector<IntPoly> parts{polys[idx[0]]};
    std::ostringstream inst;
    inst << describe_graph(catalog[idx[0]]);
    for (std::size_t i = 1; i < idx.size(); ++i) {
      whole = disjoint_union(whole, catalog[idx[i]]);
      parts.push_back(polys[idx[i]]);
      inst << " + " << describe_graph(catalog[idx[i]]);
    }
    reports.push_back(detail::poly_report("union-product", inst.str(),
                                          union_product(parts),
                                          domination_polynomial(whole, opts.oracle)));
  };
  for (std::size_t i = 0; i < catalog.size(); ++i)
    for (std::size_t j = 0; j < catalog.size(); ++j) {
      std::size_t pair[] = {i, j};
      check(pair);
    }
  for (std::size_t i = 0; i < catalog.size(); ++i)
    for (std::size_t j = 0; j < catalog.size(); ++j)
      for (std::size_t k = 0; k < catalog.size(); ++k) {
        std::size_t triple[] = {i, j, k};
        check(triple);
      }
  return reports;
}

inline std::vector<VerificationReport> verify_join(const VerifyOptions& opts = {}) {
  std::vector<VerificationReport> reports;
  auto catalog = graph_catalog(opts.g_catalog_order.value_or(3));
  std::vector<IntPoly> polys;
  polys.reserve(catalog.size());
  for (const Graph& g : catalog) polys.push_back(domination_polynomial(g, opts.oracle));

  auto check = [&](std::span<const std::size_t> idx) {
    Graph whole = catalog[idx[0]];
    std::vector<int> orders{catalog[idx[0]].order()};
    std::vector<IntPoly> parts{polys[idx[0]]};
    std::ostringstream inst;
    inst << describe_graph(catalog[idx[0]]);
    for (std::size_t i = 1; i < idx.size(); ++i) {
      whole = join(whole, catalog[idx[i]]);
      orders.push_back(catalog[idx[i]].order());
      parts.push_back(polys[idx[i]]);
      inst << " v " << describe_graph(catalog[idx[i]]);
    }
    reports.push_back(detail::poly_report("join", inst.str(),
                                          join_formula(orders, parts),
                                          domination_polynomial(whole, opts.oracle)));
  };
  for (std::size_t i = 0; i < catalog.size(); ++i)
    for (std::size_t j = 0; j < catalog.size(); ++j) {
      std::size_t pair[] = {i, j};
      check(pair);
    }
  for (std::size_t i = 0; i < catalog.size(); ++i)
    for (std::size_t j = 0; j < catalog.size(); ++j)
      for (std::size_t k = 0; k < catalog.size(); ++k) {
        std::size_t triple[] = {i, j, k};
        check(triple);
      }
  return reports;
}

inline std::vector<VerificationReport> verify_lex_empty(const VerifyOptions& opts = {}) {
  return detail::lex_formula_law(
      "lex-empty", opts, "n", [](int n) { return empty_graph(n); },
      [](int n, const Graph&, const IntPoly& d_g) { return lex_empty_left(n, d_g); });
}

inline std::vector<VerificationReport> verify_lex_complete_complete(
    const VerifyOptions& opts = {}) {
  std::vector<VerificationReport> reports;
  auto [m_lo, m_hi] = detail::range_or(opts.m_range, 1, 3);
  auto [n_lo, n_hi] = detail::range_or(opts.n_range, 1, 3);
  for (int m = std::max(1, m_lo); m <= m_hi; ++m)
    for (int n = std::max(1, n_lo); n <= n_hi; ++n) {
      if (m * n > opts.oracle.max_order) continue;
      Graph product = lexicographic_product(complete_graph(m), complete_graph(n));
      std::ostringstream inst;
      inst << "m=" << m << ", n=" << n;
      reports.push_back(detail::poly_report("lex-complete-complete", inst.str(),
                                            lex_complete_complete(m, n),
                                            domination_polynomial(product, opts.oracle)));
    }
  return reports;
}

inline std::vector<VerificationReport> verify_lex_complete_left(const VerifyOptions& opts = {}) {
  VerifyOptions local = opts;
  local.n_range = detail::range_or(opts.m_range, 1, 3);  // parameter is m
  return detail::lex_formula_law(
      "lex-complete-left", local, "m", [](int m) { return complete_graph(m); },
      [](int m, const Graph& g, const IntPoly& d_g) {
        return lex_complete_left(m, g.order(), d_g);
      });
}

inline std::vector<VerificationReport> verify_lex_star(const VerifyOptions& opts = {}) {
  return detail::lex_formula_law(
      "lex-star", opts, "n", [](int n) { return star_graph(n); },
      [](int n, const Graph& g, const IntPoly& d_g) {
        return lex_star_left(n, g.order(), d_g);
      });
}

inline std::vector<VerificationReport> verify_lex_friendship(const VerifyOptions& opts = {}) {
  return detail::lex_formula_law(
      "lex-friendship", opts, "n", [](int n) { return friendship_graph(n); },
      [](int n, const Graph& g, const IntPoly& d_g) {
        return lex_friendship_left(n, g.order(), d_g);
      });
}

inline std::vector<VerificationReport> verify_lex_complete_right(
    const VerifyOptions& opts = {}) {
  std::vector<VerificationReport> reports;
  auto [lo, hi] = detail::range_or(opts.n_range, 1, 3);
  for (int n = std::max(1, lo); n <= hi; ++n) {
    Graph right = complete_graph(n);
    for (const Graph& g : detail::formula_operands(opts)) {
      if (g.order() * n > opts.oracle.max_order) continue;
      IntPoly d_g = domination_polynomial(g, opts.oracle);
      Graph product = lexicographic_product(g, right);
      std::ostringstream inst;
      inst << "G=" << describe_graph(g) << ", n=" << n;
      reports.push_back(detail::poly_report("lex-complete-right", inst.str(),
                                            lex_complete_right(d_g, n),
                                            domination_polynomial(product, opts.oracle)));
    }
  }
  return reports;
}

// ---- structural laws -------------------------------------------------------

// gamma(G) <= gamma(G[H]) <= gamma(G) + iota(G) for G without isolated
// vertices and gamma(H) >= 2; gamma(G[H]) = gamma(G) when gamma(H) = 1 and
// both graphs have at least two vertices. Includes the two path instances
// that attain the bounds.
inline std::vector<VerificationReport> verify_gamma_bounds(const VerifyOptions& opts = {}) {
  std::vector<VerificationReport> reports;
  auto g_catalog = graph_catalog(opts.g_catalog_order.value_or(4));
  auto h_catalog = graph_catalog(opts.h_catalog_order.value_or(3));

  auto bound_report = [&](const Graph& g, const Graph& h) {
    int gamma_g = domination_number(g);
    int gamma_h = h.order() >= 1 ? domination_number(h) : 0;
    Graph product = lexicographic_product(g, h);
    int gamma_prod = domination_number(product);
    std::ostringstream inst, claim, got;
    inst << "G=" << describe_graph(g) << ", H=" << describe_graph(h);
    got << "gamma(G[H]) = " << gamma_prod;
    if (gamma_h == 1 && g.order() >= 2 && h.order() >= 2) {
      claim << "gamma(G[H]) = gamma(G) = " << gamma_g;
      reports.push_back(VerificationReport{"gamma-bounds", inst.str(), claim.str(),
                                           got.str(), gamma_prod == gamma_g});
    } else if (gamma_h >= 2 && !has_isolated_vertex(g)) {
      int iota_g = monitor_number(g);
      claim << gamma_g << " <= gamma(G[H]) <= " << gamma_g + iota_g;
      reports.push_back(VerificationReport{"gamma-bounds", inst.str(), claim.str(),
                                           got.str(),
                                           gamma_g <= gamma_prod &&
                                               gamma_prod <= gamma_g + iota_g});
    }
  };

  for (const Graph& g : g_catalog) {
    if (g.order() < 2) continue;
    for (const Graph& h : h_catalog) {
      if (h.order() < 2) continue;
      if (g.order() * h.order() > Graph::kMaxOrder) continue;
      bound_report(g, h);
    }
  }

  // Sharpness: P4[P4] attains the lower bound, P6[P4] the upper bound.
  {
    Graph p4 = path_graph(4), p6 = path_graph(6);
    int gamma_p4 = domination_number(p4);
    int lower = domination_number(lexicographic_product(p4, p4));
    reports.push_back(VerificationReport{
        "gamma-bounds", "G=P4, H=P4 (lower bound attained)",
        "gamma(G[H]) = gamma(G) = " + std::to_string(gamma_p4),
        "gamma(G[H]) = " + std::to_string(lower), lower == gamma_p4});
    int upper_target = domination_number(p6) + monitor_number(p6);
    int upper = domination_number(lexicographic_product(p6, p4));
    reports.push_back(VerificationReport{
        "gamma-bounds", "G=P6, H=P4 (upper bound attained)",
        "gamma(G[H]) = gamma(G) + iota(G) = " + std::to_string(upper_target),
        "gamma(G[H]) = " + std::to_string(upper), upper == upper_target});
  }
  return reports;
}

// G[nK_1] ~ (nK_1)[G] iff G is edgeless; G[K_n] ~ K_n[G] iff G is complete
// (n >= 2). The products reach past the default isomorphism limit, so the
// test runs with the limit set to the largest product order examined.
inline std::vector<VerificationReport> verify_commutation(const VerifyOptions& opts = {}) {
  std::vector<VerificationReport> reports;
  auto catalog = graph_catalog(opts.g_catalog_order.value_or(4));
  auto [lo, hi] = detail::range_or(opts.n_range, 2, 3);
  const int iso_limit = 24;
  for (int n = std::max(2, lo); n <= hi; ++n) {
    for (const Graph& g : catalog) {
      if (g.order() * n > iso_limit) continue;
      {
        bool iso = is_isomorphic(lexicographic_product(g, empty_graph(n)),
                                 lexicographic_product(empty_graph(n), g), iso_limit);
        bool expected = is_edgeless(g);
        std::ostringstream inst;
        inst << "G=" << describe_graph(g) << ", n=" << n << " (empty side)";
        reports.push_back(VerificationReport{
            "commutation", inst.str(),
            expected ? "commutes (G edgeless)" : "must not commute",
            iso ? "isomorphic" : "not isomorphic", iso == expected});
      }
      {
        bool iso = is_isomorphic(lexicographic_product(g, complete_graph(n)),
                                 lexicographic_product(complete_graph(n), g), iso_limit);
        bool expected = is_complete(g);
        std::ostringstream inst;
        inst << "G=" << describe_graph(g) << ", n=" << n << " (complete side)";
        reports.push_back(VerificationReport{
            "commutation", inst.str(),
            expected ? "commutes (G complete)" : "must not commute",
            iso ? "isomorphic" : "not isomorphic", iso == expected});
      }
    }
  }
  return reports;
}

// (G u H)[K] = G[K] u H[K], exactly, under the fixed product indexing.
inline std::vector<VerificationReport> verify_distributive(const VerifyOptions& opts = {}) {
  std::vector<VerificationReport> reports;
  auto catalog = graph_catalog(opts.g_catalog_order.value_or(3));
  for (const Graph& g : catalog)
    for (const Graph& h : catalog)
      for (const Graph& k : catalog) {
        if ((g.order() + h.order()) * k.order() > Graph::kMaxOrder) continue;
        Graph lhs = lexicographic_product(disjoint_union(g, h), k);
        Graph rhs = disjoint_union(lexicographic_product(g, k),
                                   lexicographic_product(h, k));
        std::ostringstream inst;
        inst << "G=" << describe_graph(g) << ", H=" << describe_graph(h)
             << ", K=" << describe_graph(k);
        reports.push_back(detail::graph_equal_report("distributive", inst.str(), lhs, rhs));
      }
  return reports;
}

// complement(G[H]) = complement(G)[complement(H)], exactly.
inline std::vector<VerificationReport> verify_complement_law(const VerifyOptions& opts = {}) {
  std::vector<VerificationReport> reports;
  auto catalog = graph_catalog(opts.g_catalog_order.value_or(3));
  for (const Graph& g : catalog)
    for (const Graph& h : catalog) {
      Graph lhs = complement(lexicographic_product(g, h));
      Graph rhs = lexicographic_product(complement(g), complement(h));
      std::ostringstream inst;
      inst << "G=" << describe_graph(g) << ", H=" << describe_graph(h);
      reports.push_back(detail::graph_equal_report("complement", inst.str(), lhs, rhs));
    }
  return reports;
}

// (G1[G2])[G3] = G1[G2[G3]], exactly, under the fixed product indexing.
inline std::vector<VerificationReport> verify_associativity(const VerifyOptions& opts = {}) {
  std::vector<VerificationReport> reports;
  auto catalog = graph_catalog(opts.g_catalog_order.value_or(3));
  for (const Graph& a : catalog)
    for (const Graph& b : catalog)
      for (const Graph& c : catalog) {
        if (a.order() * b.order() * c.order() > Graph::kMaxOrder) continue;
        Graph lhs = lexicographic_product(lexicographic_product(a, b), c);
        Graph rhs = lexicographic_product(a, lexicographic_product(b, c));
        std::ostringstream inst;
        inst << "G1=" << describe_graph(a) << ", G2=" << describe_graph(b)
             << ", G3=" << describe_graph(c);
        reports.push_back(detail::graph_equal_report("associativity", inst.str(), lhs, rhs));
      }
  return reports;
}

// The isomorphism lemmas, for every parameterization with product order
// within the default isomorphism limit.
inline std::vector<VerificationReport> verify_iso_lemmas(const VerifyOptions& opts = {}) {
  std::vector<VerificationReport> reports;
  auto catalog = graph_catalog(opts.g_catalog_order.value_or(4));
  const int limit = kDefaultIsoLimit;

  auto add = [&](const std::string& claim, const std::string& instance,
                 const Graph& lhs, const Graph& rhs) {
    bool iso = is_isomorphic(lhs, rhs, limit);
    reports.push_back(VerificationReport{"iso-lemmas", claim + ": " + instance,
                                         "isomorphic",
                                         iso ? "isomorphic" : "not isomorphic", iso});
  };

  for (const Graph& g : catalog) {
    if (g.order() == 0) continue;
    for (int n = 1; n * g.order() <= limit; ++n) {
      // (nK1)[G] ~ nG
      Graph copies = g;
      for (int i = 1; i < n; ++i) copies = disjoint_union(copies, g);
      add("(nK1)[G] ~ nG", "n=" + std::to_string(n) + ", G=" + describe_graph(g),
          lexicographic_product(empty_graph(n), g), copies);
      // K_m[G] ~ join of m copies of G
      Graph joined = g;
      for (int i = 1; i < n; ++i) joined = join(joined, g);
      add("Km[G] ~ m-fold join of G", "m=" + std::to_string(n) + ", G=" + describe_graph(g),
          lexicographic_product(complete_graph(n), g), joined);
    }
    // K_{1,n}[G] ~ G v nG
    for (int n = 1; (n + 1) * g.order() <= limit; ++n) {
      Graph copies = g;
      for (int i = 1; i < n; ++i) copies = disjoint_union(copies, g);
      add("K1n[G] ~ G v nG", "n=" + std::to_string(n) + ", G=" + describe_graph(g),
          lexicographic_product(star_graph(n), g), join(g, copies));
    }
    // F_n[G] ~ G v n(G v G)
    for (int n = 1; (2 * n + 1) * g.order() <= limit; ++n) {
      Graph pair = join(g, g);
      Graph copies = pair;
      for (int i = 1; i < n; ++i) copies = disjoint_union(copies, pair);
      add("Fn[G] ~ G v n(G v G)", "n=" + std::to_string(n) + ", G=" + describe_graph(g),
          lexicographic_product(friendship_graph(n), g), join(g, copies));
    }
  }
  // K_m[K_n] ~ K_{mn}
  for (int m = 1; m <= limit; ++m)
    for (int n = 1; m * n <= limit; ++n)
      add("Km[Kn] ~ Kmn", "m=" + std::to_string(m) + ", n=" + std::to_string(n),
          lexicographic_product(complete_graph(m), complete_graph(n)),
          complete_graph(m * n));
  // K_2[nK1] ~ K_{n,n}
  for (int n = 1; 2 * n <= limit; ++n)
    add("K2[nK1] ~ Knn", "n=" + std::to_string(n),
        lexicographic_product(complete_graph(2), empty_graph(n)), biclique(n, n));
  return reports;
}

// ---- dispatch ---------------------------------------------------------------

inline const std::vector<std::string>& law_names() {
  static const std::vector<std::string> names = {
      "union-product",    "join",          "lex-empty",
      "lex-complete-complete", "lex-complete-left", "lex-star",
      "lex-friendship",   "lex-complete-right", "gamma-bounds",
      "commutation",      "distributive",  "complement",
      "associativity",    "iso-lemmas"};
  return names;
}

inline std::vector<VerificationReport> run_law(const std::string& law,
                                               const VerifyOptions& opts = {}) {
  if (law == "union-product") return verify_union_product(opts);
  if (law == "join") return verify_join(opts);
  if (law == "lex-empty") return verify_lex_empty(opts);
  if (law == "lex-complete-complete") return verify_lex_complete_complete(opts);
  if (law == "lex-complete-left") return verify_lex_complete_left(opts);
  if (law == "lex-star") return verify_lex_star(opts);
  if (law == "lex-friendship") return verify_lex_friendship(opts);
  if (law == "lex-complete-right") return verify_lex_complete_right(opts);
  if (law == "gamma-bounds") return verify_gamma_bounds(opts);
  if (law == "commutation") return verify_commutation(opts);
  if (law == "distributive") return verify_distributive(opts);
  if (law == "complement") return verify_complement_law(opts);
  if (law == "associativity") return verify_associativity(opts);
  if (law == "iso-lemmas") return verify_iso_lemmas(opts);
  throw std::invalid_argument("unknown law id: " + law);
}

}  // namespace domlex
