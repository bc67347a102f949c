#pragma once

#include <string>
#include <vector>

#include "domlex/catalog.hpp"
#include "domlex/closed_forms.hpp"
#include "domlex/domination.hpp"
#include "domlex/graph.hpp"
#include "domlex/polynomial.hpp"

namespace domlex {

// A pair (G, H) where the candidate identity D(G[H], x) = D(G, D(H, x) - 1)
// disagrees with the enumerated D(G[H], x).
struct Counterexample {
  Graph g, h;
  std::string g_desc, h_desc;
  IntPoly probe;   // D(G, D(H, x) - 1)
  IntPoly oracle;  // D(G[H], x) by enumeration
};

struct HuntResult {
  long pairs_tested = 0;
  std::vector<Counterexample> counterexamples;
  long complete_h_pairs = 0;  // pairs whose H is complete
  long confirmations = 0;     // of those, pairs where D(G[K_n]) = D(G,(1+x)^n - 1)
};

// Tests the refuted composition identity over every pair from the
// non-isomorphic catalogs (G of order <= max_g, H of order <= max_h), and
// separately confirms the true composition law for complete H.
inline HuntResult run_hunt(int max_g = 4, int max_h = 3, const OracleOptions& opts = {}) {
  HuntResult result;
  auto g_catalog = graph_catalog(max_g);
  auto h_catalog = graph_catalog(max_h);
  for (const Graph& g : g_catalog) {
    IntPoly d_g = domination_polynomial(g, opts);
    for (const Graph& h : h_catalog) {
      if (g.order() * h.order() > opts.max_order) continue;
      ++result.pairs_tested;
      IntPoly d_h = domination_polynomial(h, opts);
      IntPoly oracle = domination_polynomial(lexicographic_product(g, h), opts);
      IntPoly probe = false_identity_probe(d_g, d_h);
      if (probe != oracle)
        result.counterexamples.push_back(
            {g, h, describe_graph(g), describe_graph(h), probe, oracle});
      if (is_complete(h)) {
        ++result.complete_h_pairs;
        if (lex_complete_right(d_g, h.order()) == oracle) ++result.confirmations;
      }
    }
  }
  return result;
}

}  // namespace domlex
