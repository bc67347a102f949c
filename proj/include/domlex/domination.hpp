#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "domlex/bigint.hpp"
#include "domlex/errors.hpp"
#include "domlex/graph.hpp"
#include "domlex/polynomial.hpp"

namespace domlex {

// Full 2^n subset enumeration is capped at this order by default.
inline constexpr int kDefaultEnumerationCap = 26;
// Size-ascending scans (domination number, monitor number) allow more.
inline constexpr int kDefaultScanCap = 32;

struct OracleOptions {
  int max_order = kDefaultEnumerationCap;
  int threads = 1;  // subset range is split into contiguous per-worker chunks
};

// d(G,0..n), the domination number, the monitor number and the number of
// minimum dominating sets, all from exhaustive enumeration.
struct DominationSummary {
  std::vector<BigInt> counts;
  std::optional<int> gamma;
  std::optional<int> iota;
  BigInt gamma_set_count = 0;
};

inline std::vector<VertexSet> closed_neighborhoods(const Graph& g) {
  std::vector<VertexSet> result(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v)
    result[static_cast<std::size_t>(v)] = VertexSet{g.closed_neighbors(v)};
  return result;
}

// N[S] = V, i.e. the union of closed neighborhoods over S covers every vertex.
inline bool is_dominating(const Graph& g, VertexSet s) {
  if (s.mask & ~g.vertex_mask())
    throw std::out_of_range("vertex set has bits beyond the graph order");
  std::uint64_t cover = 0;
  for (std::uint64_t rest = s.mask; rest; rest &= rest - 1)
    cover |= g.closed_neighbors(std::countr_zero(rest));
  return cover == g.vertex_mask();
}

namespace detail {

inline std::vector<std::uint64_t> closed_masks(const Graph& g) {
  std::vector<std::uint64_t> closed(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v)
    closed[static_cast<std::size_t>(v)] = g.closed_neighbors(v);
  return closed;
}

// Visits all k-subsets of {0..n-1} as masks in ascending numeric order
// (Gosper's hack). The visitor returns false to stop; so does this function.
template <typename Visit>
bool visit_k_subsets(int n, int k, Visit&& visit) {
  if (k < 0 || k > n) return true;
  if (k == 0) return visit(std::uint64_t{0});
  std::uint64_t s = k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  for (;;) {
    if (!visit(s)) return false;
    std::uint64_t c = s & (~s + 1);
    std::uint64_t r = s + c;
    if (r == 0) return true;  // carried out of the word
    s = (((r ^ s) >> 2) / c) | r;
    if (n < 64 && (s >> n)) return true;
  }
}

inline void check_enumeration_order(int n, int max_order) {
  if (n > max_order)
    throw CapError("order " + std::to_string(n) +
                   " exceeds the enumeration cap " + std::to_string(max_order));
  if (n > 62) throw CapError("subset enumeration infeasible beyond order 62");
}

}  // namespace detail

// Coefficient i counts the dominating i-subsets; exact. Subset masks
// 0..2^n-1 are scanned directly, OR-ing precomputed closed-neighborhood
// masks of the members. With opts.threads > 1 the mask range is split into
// contiguous chunks whose independent count vectors are added in worker
// order, so the result does not depend on scheduling.
inline IntPoly domination_polynomial(const Graph& g, const OracleOptions& opts = {}) {
  int n = g.order();
  detail::check_enumeration_order(n, opts.max_order);
  auto closed = detail::closed_masks(g);
  const std::uint64_t full = g.vertex_mask();
  const std::uint64_t total = std::uint64_t{1} << n;

  auto scan_chunk = [&](std::uint64_t lo, std::uint64_t hi,
                        std::vector<std::uint64_t>& counts) {
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      std::uint64_t cover = 0;
      for (std::uint64_t rest = mask; rest; rest &= rest - 1)
        cover |= closed[static_cast<std::size_t>(std::countr_zero(rest))];
      if (cover == full) ++counts[static_cast<std::size_t>(std::popcount(mask))];
    }
  };

  int workers = opts.threads < 1 ? 1 : opts.threads;
  if (static_cast<std::uint64_t>(workers) > total)
    workers = static_cast<int>(total);

  std::vector<std::vector<std::uint64_t>> partial(
      static_cast<std::size_t>(workers),
      std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1));
  if (workers == 1) {
    scan_chunk(0, total, partial[0]);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      auto lo = static_cast<std::uint64_t>(
          static_cast<unsigned __int128>(total) * w / workers);
      auto hi = static_cast<std::uint64_t>(
          static_cast<unsigned __int128>(total) * (w + 1) / workers);
      pool.emplace_back(scan_chunk, lo, hi, std::ref(partial[static_cast<std::size_t>(w)]));
    }
    for (auto& t : pool) t.join();
  }

  std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1);
  for (const auto& counts : partial)
    for (std::size_t i = 0; i < counts.size(); ++i) coeffs[i] += counts[i];
  return IntPoly(std::move(coeffs));
}

// Same result by inclusion-exclusion over the forced-undominated set A:
// a set S leaves every vertex of A undominated iff S avoids N[A], so
// d(G,i) = sum over A subseteq V of (-1)^{|A|} * C(n - |N[A]|, i).
// One 2^n pass accumulating signed binomial rows; 64-bit accumulators are
// exact here since |partial sums| <= 2^n * C(n,i) for the capped orders.
inline IntPoly domination_polynomial_ie(const Graph& g, const OracleOptions& opts = {}) {
  int n = g.order();
  detail::check_enumeration_order(n, opts.max_order);
  auto closed = detail::closed_masks(g);

  // binom[k][i] = C(k, i)
  std::vector<std::vector<long long>> binom(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    auto& row = binom[static_cast<std::size_t>(k)];
    row.assign(static_cast<std::size_t>(k) + 1, 1);
    for (int i = 1; i < k; ++i)
      row[static_cast<std::size_t>(i)] = binom[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)] +
                                         binom[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i)];
  }

  std::vector<long long> acc(static_cast<std::size_t>(n) + 1);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t a = 0; a < total; ++a) {
    std::uint64_t reach = 0;
    for (std::uint64_t rest = a; rest; rest &= rest - 1)
      reach |= closed[static_cast<std::size_t>(std::countr_zero(rest))];
    int k = n - std::popcount(reach);
    const auto& row = binom[static_cast<std::size_t>(k)];
    if (std::popcount(a) & 1) {
      for (int i = 0; i <= k; ++i) acc[static_cast<std::size_t>(i)] -= row[static_cast<std::size_t>(i)];
    } else {
      for (int i = 0; i <= k; ++i) acc[static_cast<std::size_t>(i)] += row[static_cast<std::size_t>(i)];
    }
  }

  std::vector<BigInt> coeffs(acc.begin(), acc.end());
  return IntPoly(std::move(coeffs));
}

// Minimum dominating-set size, by scanning subset sizes in ascending order,
// so large graphs with small domination number stay cheap.
inline int domination_number(const Graph& g, int max_order = kDefaultScanCap) {
  int n = g.order();
  if (n < 1) throw std::invalid_argument("domination number requires order >= 1");
  if (n > max_order)
    throw CapError("order " + std::to_string(n) + " exceeds the scan cap " +
                   std::to_string(max_order));
  auto closed = detail::closed_masks(g);
  const std::uint64_t full = g.vertex_mask();
  for (int size = 1; size <= n; ++size) {
    bool found = false;
    detail::visit_k_subsets(n, size, [&](std::uint64_t s) {
      std::uint64_t cover = 0;
      for (std::uint64_t rest = s; rest; rest &= rest - 1)
        cover |= closed[static_cast<std::size_t>(std::countr_zero(rest))];
      if (cover == full) {
        found = true;
        return false;
      }
      return true;
    });
    if (found) return size;
  }
  return n;  // unreachable: V always dominates
}

// All dominating sets of minimum size, in ascending mask order.
inline std::vector<VertexSet> gamma_sets(const Graph& g, int max_order = kDefaultScanCap) {
  int gamma = domination_number(g, max_order);
  auto closed = detail::closed_masks(g);
  const std::uint64_t full = g.vertex_mask();
  std::vector<VertexSet> result;
  detail::visit_k_subsets(g.order(), gamma, [&](std::uint64_t s) {
    std::uint64_t cover = 0;
    for (std::uint64_t rest = s; rest; rest &= rest - 1)
      cover |= closed[static_cast<std::size_t>(std::countr_zero(rest))];
    if (cover == full) result.push_back(VertexSet{s});
    return true;
  });
  return result;
}

// First dominating set of the given size in ascending mask order, if any.
inline std::optional<VertexSet> find_dominating_set(const Graph& g, int size,
                                                    int max_order = kDefaultScanCap) {
  if (g.order() > max_order)
    throw CapError("order " + std::to_string(g.order()) + " exceeds the scan cap " +
                   std::to_string(max_order));
  auto closed = detail::closed_masks(g);
  const std::uint64_t full = g.vertex_mask();
  std::optional<VertexSet> found;
  detail::visit_k_subsets(g.order(), size, [&](std::uint64_t s) {
    std::uint64_t cover = 0;
    for (std::uint64_t rest = s; rest; rest &= rest - 1)
      cover |= closed[static_cast<std::size_t>(std::countr_zero(rest))];
    if (cover == full) {
      found = VertexSet{s};
      return false;
    }
    return true;
  });
  return found;
}

// First U of the given size with d subseteq N[U], in ascending mask order.
inline std::optional<VertexSet> find_monitor_set(const Graph& g, VertexSet d, int size,
                                                 int max_order = kDefaultScanCap) {
  if (g.order() > max_order)
    throw CapError("order " + std::to_string(g.order()) + " exceeds the scan cap " +
                   std::to_string(max_order));
  auto closed = detail::closed_masks(g);
  std::optional<VertexSet> found;
  detail::visit_k_subsets(g.order(), size, [&](std::uint64_t u) {
    std::uint64_t cover = 0;
    for (std::uint64_t rest = u; rest; rest &= rest - 1)
      cover |= closed[static_cast<std::size_t>(std::countr_zero(rest))];
    if ((d.mask & ~cover) == 0) {
      found = VertexSet{u};
      return false;
    }
    return true;
  });
  return found;
}

// Minimum size of a monitor set of d: the smallest U (any subset of V,
// not required to dominate or to avoid d) with d subseteq N[U].
inline int monitor_number_of_set(const Graph& g, VertexSet d,
                                 int max_order = kDefaultScanCap) {
  if (d.mask == 0) throw std::invalid_argument("monitor set target must be nonempty");
  if (d.mask & ~g.vertex_mask())
    throw std::out_of_range("vertex set has bits beyond the graph order");
  int n = g.order();
  if (n > max_order)
    throw CapError("order " + std::to_string(n) + " exceeds the scan cap " +
                   std::to_string(max_order));
  auto closed = detail::closed_masks(g);
  for (int size = 1; size <= n; ++size) {
    int found = -1;
    detail::visit_k_subsets(n, size, [&](std::uint64_t u) {
      std::uint64_t cover = 0;
      for (std::uint64_t rest = u; rest; rest &= rest - 1)
        cover |= closed[static_cast<std::size_t>(std::countr_zero(rest))];
      if ((d.mask & ~cover) == 0) {
        found = size;
        return false;
      }
      return true;
    });
    if (found >= 0) return found;
  }
  return n;  // unreachable: N[V] = V covers every target
}

// iota(G): minimum monitor number over all minimum dominating sets.
inline int monitor_number(const Graph& g, int max_order = kDefaultScanCap) {
  if (g.order() < 1) throw std::invalid_argument("monitor number requires order >= 1");
  int best = g.order() + 1;
  for (VertexSet d : gamma_sets(g, max_order)) {
    best = std::min(best, monitor_number_of_set(g, d, max_order));
    if (best == 1) break;  // monitor sets are nonempty, 1 is minimal
  }
  return best;
}

inline DominationSummary summarize(const Graph& g, const OracleOptions& opts = {}) {
  DominationSummary summary;
  summary.counts = domination_polynomial(g, opts).coefficients();
  summary.counts.resize(static_cast<std::size_t>(g.order()) + 1);
  if (g.order() == 0) {
    summary.gamma = 0;  // the empty set dominates the empty graph
    summary.gamma_set_count = 1;
    return summary;
  }
  for (std::size_t i = 1; i < summary.counts.size(); ++i) {
    if (summary.counts[i] != 0) {
      summary.gamma = static_cast<int>(i);
      summary.gamma_set_count = summary.counts[i];
      break;
    }
  }
  summary.iota = monitor_number(g, std::max(opts.max_order, kDefaultScanCap));
  return summary;
}

}  // namespace domlex
