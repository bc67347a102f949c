#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "domlex/errors.hpp"
#include "domlex/graph.hpp"
#include "domlex/isomorphism.hpp"

namespace domlex {

inline constexpr int kMaxCatalogOrder = 6;

// Exactly one representative per isomorphism class of simple graphs on n
// vertices, in deterministic order: all 2^C(n,2) edge sets are scanned in
// ascending mask order and deduplicated with is_isomorphic; the first member
// of each class is kept.
inline std::vector<Graph> enumerate_graphs(int n) {
  if (n < 0) throw std::invalid_argument("graph order must be >= 0");
  if (n > kMaxCatalogOrder)
    throw CapError("graph enumeration on order " + std::to_string(n) +
                   " exceeds limit " + std::to_string(kMaxCatalogOrder));
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);

  std::vector<Graph> result;
  // Buckets of result indices keyed by sorted vertex invariants.
  std::map<std::vector<std::pair<int, std::vector<int>>>, std::vector<std::size_t>> buckets;
  std::vector<std::pair<int, int>> edges;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    edges.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1) edges.push_back(pairs[i]);
    Graph g(n, edges);
    auto key = detail::vertex_invariants(g);
    std::sort(key.begin(), key.end());
    auto& bucket = buckets[key];
    bool fresh = true;
    for (std::size_t idx : bucket) {
      if (is_isomorphic(g, result[idx], kMaxCatalogOrder)) {
        fresh = false;
        break;
      }
    }
    if (fresh) {
      bucket.push_back(result.size());
      result.push_back(std::move(g));
    }
  }
  return result;
}

// All isomorphism-class representatives of orders 1..max_order, ascending.
inline std::vector<Graph> graph_catalog(int max_order) {
  std::vector<Graph> result;
  for (int n = 1; n <= max_order; ++n) {
    auto layer = enumerate_graphs(n);
    result.insert(result.end(), layer.begin(), layer.end());
  }
  return result;
}

namespace detail {

inline std::vector<std::uint64_t> component_masks(const Graph& g) {
  std::vector<std::uint64_t> comps;
  std::uint64_t remaining = g.vertex_mask();
  while (remaining) {
    std::uint64_t comp = remaining & -remaining;
    for (;;) {
      std::uint64_t grown = comp;
      for (std::uint64_t rest = comp; rest; rest &= rest - 1)
        grown |= g.neighbors(std::countr_zero(rest));
      if (grown == comp) break;
      comp = grown;
    }
    comps.push_back(comp);
    remaining &= ~comp;
  }
  return comps;
}

inline Graph induced_subgraph(const Graph& g, std::uint64_t verts) {
  std::vector<int> order_map(static_cast<std::size_t>(g.order()), -1);
  int k = 0;
  for (std::uint64_t rest = verts; rest; rest &= rest - 1)
    order_map[static_cast<std::size_t>(std::countr_zero(rest))] = k++;
  std::vector<std::pair<int, int>> edges;
  for (std::uint64_t rest = verts; rest; rest &= rest - 1) {
    int v = std::countr_zero(rest);
    for (std::uint64_t nb = g.neighbors(v) & verts; nb; nb &= nb - 1) {
      int u = std::countr_zero(nb);
      if (u > v)
        edges.emplace_back(order_map[static_cast<std::size_t>(v)],
                           order_map[static_cast<std::size_t>(u)]);
    }
  }
  return Graph(k, edges);
}

inline std::string raw_description(const Graph& g) {
  std::ostringstream out;
  out << "graph(n=" << g.order() << ";";
  bool any = false;
  for (int v = 0; v < g.order(); ++v)
    for (std::uint64_t nb = g.neighbors(v); nb; nb &= nb - 1) {
      int u = std::countr_zero(nb);
      if (u > v) {
        out << " " << v << "-" << u;
        any = true;
      }
    }
  if (!any) out << " no edges";
  out << ")";
  return out.str();
}

inline std::string connected_family_name(const Graph& g) {
  int n = g.order();
  if (n == 1) return "K1";
  if (is_complete(g)) return "K" + std::to_string(n);
  if (n >= 2 && is_isomorphic(g, path_graph(n), kMaxCatalogOrder))
    return "P" + std::to_string(n);
  if (n >= 3 && is_isomorphic(g, cycle_graph(n), kMaxCatalogOrder))
    return "C" + std::to_string(n);
  if (is_isomorphic(g, star_graph(n - 1), kMaxCatalogOrder))
    return "S" + std::to_string(n - 1);
  for (int m = 2; 2 * m <= n; ++m)
    if (is_isomorphic(g, biclique(m, n - m), kMaxCatalogOrder))
      return "B(" + std::to_string(m) + "," + std::to_string(n - m) + ")";
  if (n % 2 == 1 && n >= 5 && is_isomorphic(g, friendship_graph(n / 2), kMaxCatalogOrder))
    return "F" + std::to_string(n / 2);
  return raw_description(g);
}

}  // namespace detail

// Short human name for a small graph: a family atom when one matches
// ("K3", "P4", "B(2,3)"), a union of named components ("2K2", "K2+K1"),
// or a raw edge listing.
inline std::string describe_graph(const Graph& g) {
  if (g.order() == 0) return "E0";
  if (g.order() > kMaxCatalogOrder) return detail::raw_description(g);
  if (is_edgeless(g))
    return g.order() == 1 ? "K1" : "E" + std::to_string(g.order());

  auto comps = detail::component_masks(g);
  std::vector<std::string> names;
  for (std::uint64_t comp : comps) {
    std::string name = detail::connected_family_name(detail::induced_subgraph(g, comp));
    if (name.starts_with("graph(")) return detail::raw_description(g);
    names.push_back(std::move(name));
  }
  std::sort(names.begin(), names.end());
  std::ostringstream out;
  for (std::size_t i = 0; i < names.size();) {
    std::size_t j = i;
    while (j < names.size() && names[j] == names[i]) ++j;
    if (i > 0) out << "+";
    if (j - i > 1) out << (j - i);
    out << names[i];
    i = j;
  }
  return out.str();
}

}  // namespace domlex
