#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "domlex/errors.hpp"
#include "domlex/graph.hpp"

namespace domlex {

inline constexpr int kDefaultIsoLimit = 10;

namespace detail {

// Per-vertex refinement invariant: (degree, sorted neighbor degrees).
inline std::vector<std::pair<int, std::vector<int>>> vertex_invariants(const Graph& g) {
  std::vector<std::pair<int, std::vector<int>>> inv(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    inv[static_cast<std::size_t>(v)].first = g.degree(v);
    auto& nd = inv[static_cast<std::size_t>(v)].second;
    for (std::uint64_t rest = g.neighbors(v); rest; rest &= rest - 1)
      nd.push_back(g.degree(std::countr_zero(rest)));
    std::sort(nd.begin(), nd.end());
  }
  return inv;
}

inline bool extend_mapping(const Graph& a, const Graph& b,
                           const std::vector<std::pair<int, std::vector<int>>>& inv_a,
                           const std::vector<std::pair<int, std::vector<int>>>& inv_b,
                           std::vector<int>& map, std::uint64_t used, int next) {
  int n = a.order();
  if (next == n) return true;
  for (int u = 0; u < n; ++u) {
    if ((used >> u) & 1) continue;
    if (inv_a[static_cast<std::size_t>(next)] != inv_b[static_cast<std::size_t>(u)])
      continue;
    bool ok = true;
    for (int j = 0; j < next; ++j) {
      if (a.adjacent(next, j) != b.adjacent(u, map[static_cast<std::size_t>(j)])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    map[static_cast<std::size_t>(next)] = u;
    if (extend_mapping(a, b, inv_a, inv_b, map, used | (std::uint64_t{1} << u), next + 1))
      return true;
  }
  return false;
}

}  // namespace detail

// True iff an adjacency-preserving bijection exists. Permutation search with
// degree-sequence and neighbor-degree-multiset pruning; refuses orders above
// `limit` (graphs of unequal order compare false without a search).
inline bool is_isomorphic(const Graph& a, const Graph& b, int limit = kDefaultIsoLimit) {
  if (a.order() != b.order()) return false;
  if (a.order() > limit)
    throw CapError("isomorphism test on order " + std::to_string(a.order()) +
                   " exceeds limit " + std::to_string(limit));
  if (edge_count(a) != edge_count(b)) return false;

  auto inv_a = detail::vertex_invariants(a);
  auto inv_b = detail::vertex_invariants(b);
  auto sorted_a = inv_a, sorted_b = inv_b;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) return false;

  std::vector<int> map(static_cast<std::size_t>(a.order()), -1);
  return detail::extend_mapping(a, b, inv_a, inv_b, map, 0, 0);
}

}  // namespace domlex
