#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "domlex/errors.hpp"

namespace domlex {

// All-ones mask over vertex indices 0..n-1.
inline std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Subset of the vertices of an associated graph, as a single-word bit set.
struct VertexSet {
  std::uint64_t mask = 0;

  int size() const { return std::popcount(mask); }
  bool contains(int v) const { return (mask >> v) & 1; }
  bool subset_of(VertexSet other) const { return (mask & ~other.mask) == 0; }

  friend bool operator==(VertexSet, VertexSet) = default;
};

// "{1, 4}"
inline std::string to_string(VertexSet s) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (std::uint64_t rest = s.mask; rest; rest &= rest - 1) {
    if (!first) out << ", ";
    out << std::countr_zero(rest);
    first = false;
  }
  out << "}";
  return out.str();
}

// Immutable simple graph of order <= 64. Adjacency is one bitmask per
// vertex: bit u of adjacency(v) set iff {u,v} is an edge. Construction
// checks symmetry, irreflexivity and that no bit >= order is set.
class Graph {
public:
  static constexpr int kMaxOrder = 64;

  Graph() = default;  // order 0

  Graph(int order, std::span<const std::pair<int, int>> edges)
      : order_(check_order(order)), adj_(static_cast<std::size_t>(order)) {
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= order_ || v >= order_)
        throw std::out_of_range("edge endpoint out of range");
      if (u == v) throw std::invalid_argument("loop edge not allowed");
      adj_[static_cast<std::size_t>(u)] |= bit(v);
      adj_[static_cast<std::size_t>(v)] |= bit(u);
    }
    validate();
  }

  static Graph from_adjacency(int order, std::vector<std::uint64_t> adj) {
    Graph g;
    g.order_ = check_order(order);
    if (adj.size() != static_cast<std::size_t>(order))
      throw std::invalid_argument("adjacency row count does not match order");
    g.adj_ = std::move(adj);
    g.validate();
    return g;
  }

  int order() const { return order_; }

  // Open neighborhood N(v) as a bit set.
  std::uint64_t neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  // Closed neighborhood N[v] = N(v) with bit v set.
  std::uint64_t closed_neighbors(int v) const { return neighbors(v) | bit(v); }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    return (neighbors(v) >> u) & 1;
  }

  int degree(int v) const { return std::popcount(neighbors(v)); }

  std::uint64_t vertex_mask() const { return full_mask(order_); }

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

  static int check_order(int n) {
    if (n < 0) throw std::invalid_argument("graph order must be >= 0");
    if (n > kMaxOrder)
      throw CapError("graph order " + std::to_string(n) + " exceeds 64");
    return n;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= order_) throw std::out_of_range("vertex index out of range");
  }

  void validate() const {
    for (int v = 0; v < order_; ++v) {
      std::uint64_t row = adj_[static_cast<std::size_t>(v)];
      if (row & ~vertex_mask())
        throw std::logic_error("adjacency bit set beyond graph order");
      if ((row >> v) & 1) throw std::logic_error("adjacency is not irreflexive");
      for (std::uint64_t rest = row; rest; rest &= rest - 1) {
        int u = std::countr_zero(rest);
        if (!((adj_[static_cast<std::size_t>(u)] >> v) & 1))
          throw std::logic_error("adjacency is not symmetric");
      }
    }
  }

  int order_ = 0;
  std::vector<std::uint64_t> adj_;
};

// ---- named families -------------------------------------------------------

inline Graph empty_graph(int n) { return Graph(n, {}); }

inline Graph complete_graph(int n) {
  if (n < 0) throw std::invalid_argument("graph order must be >= 0");
  if (n > Graph::kMaxOrder)
    throw CapError("graph order " + std::to_string(n) + " exceeds 64");
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    adj[static_cast<std::size_t>(v)] = full_mask(n) & ~(std::uint64_t{1} << v);
  return Graph::from_adjacency(n, std::move(adj));
}

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle requires order >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

// K_{1,n} with the center at index 0; order n+1.
inline Graph star_graph(int n) {
  if (n < 0) throw std::invalid_argument("star requires n >= 0");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) edges.emplace_back(0, i);
  return Graph(n + 1, edges);
}

inline Graph biclique(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("biclique requires m, n >= 0");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
  return Graph(m + n, edges);
}

// F_n: n triangles sharing the center vertex at index 0; order 2n+1.
inline Graph friendship_graph(int n) {
  if (n < 1) throw std::invalid_argument("friendship requires n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    int a = 2 * i + 1, b = 2 * i + 2;
    edges.emplace_back(0, a);
    edges.emplace_back(0, b);
    edges.emplace_back(a, b);
  }
  return Graph(2 * n + 1, edges);
}

// ---- graph algebra --------------------------------------------------------

// Disjoint union; vertices of h are re-indexed by offset g.order().
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  int gn = g.order(), hn = h.order();
  if (gn + hn > Graph::kMaxOrder)
    throw CapError("union order " + std::to_string(gn + hn) + " exceeds 64");
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(gn + hn));
  for (int v = 0; v < gn; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v);
  for (int v = 0; v < hn; ++v)
    adj[static_cast<std::size_t>(gn + v)] = h.neighbors(v) << gn;
  return Graph::from_adjacency(gn + hn, std::move(adj));
}

// Disjoint union plus every edge between the two vertex sets.
inline Graph join(const Graph& g, const Graph& h) {
  int gn = g.order(), hn = h.order();
  if (gn + hn > Graph::kMaxOrder)
    throw CapError("join order " + std::to_string(gn + hn) + " exceeds 64");
  std::uint64_t g_side = full_mask(gn);
  std::uint64_t h_side = full_mask(gn + hn) & ~g_side;
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(gn + hn));
  for (int v = 0; v < gn; ++v)
    adj[static_cast<std::size_t>(v)] = g.neighbors(v) | h_side;
  for (int v = 0; v < hn; ++v)
    adj[static_cast<std::size_t>(gn + v)] = (h.neighbors(v) << gn) | g_side;
  return Graph::from_adjacency(gn + hn, std::move(adj));
}

inline Graph complement(const Graph& g) {
  int n = g.order();
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    adj[static_cast<std::size_t>(v)] =
        ~g.neighbors(v) & g.vertex_mask() & ~(std::uint64_t{1} << v);
  return Graph::from_adjacency(n, std::move(adj));
}

// Lexicographic product g[h]: vertex (a,x) is stored at index a*h.order()+x;
// (a,x) ~ (b,y) iff a ~ b in g, or a = b and x ~ y in h.
inline Graph lexicographic_product(const Graph& g, const Graph& h) {
  int gn = g.order(), hn = h.order();
  if (gn * hn > Graph::kMaxOrder)
    throw CapError("product order " + std::to_string(gn * hn) + " exceeds 64");
  int n = gn * hn;
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
  std::uint64_t block = full_mask(hn);
  for (int a = 0; a < gn; ++a) {
    // Union of whole blocks over a's neighbors in g.
    std::uint64_t g_part = 0;
    for (std::uint64_t rest = g.neighbors(a); rest; rest &= rest - 1)
      g_part |= block << (std::countr_zero(rest) * hn);
    for (int x = 0; x < hn; ++x)
      adj[static_cast<std::size_t>(a * hn + x)] =
          g_part | (h.neighbors(x) << (a * hn));
  }
  return Graph::from_adjacency(n, std::move(adj));
}

// ---- degree statistics ----------------------------------------------------

inline int edge_count(const Graph& g) {
  int total = 0;
  for (int v = 0; v < g.order(); ++v) total += g.degree(v);
  return total / 2;
}

inline int max_degree(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("max_degree of empty graph");
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

inline int min_degree(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("min_degree of empty graph");
  int best = g.order();
  for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

inline bool has_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

inline bool is_edgeless(const Graph& g) { return edge_count(g) == 0; }

inline bool is_complete(const Graph& g) {
  return edge_count(g) == g.order() * (g.order() - 1) / 2;
}

}  // namespace domlex
