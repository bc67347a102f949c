#pragma once

#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "domlex/errors.hpp"
#include "domlex/graph.hpp"

namespace domlex {

// Edge-list format: first data line "n m", then m lines "u v" with
// 0 <= u < v < n. Lines whose first non-blank character is '#' are comments.
// Duplicate or reversed pairs are rejected.
inline Graph read_edge_list(std::istream& in) {
  auto fail = [](int line_no, const std::string& msg) -> ParseError {
    return ParseError("edge list line " + std::to_string(line_no) + ": " + msg, 0);
  };

  int line_no = 0;
  int n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first) || first[0] == '#') continue;

    if (n < 0) {
      std::istringstream header(line);
      if (!(header >> n >> m) || n < 0 || m < 0)
        throw fail(line_no, "expected header \"n m\"");
      std::string extra;
      if (header >> extra) throw fail(line_no, "trailing content after header");
      if (n > Graph::kMaxOrder)
        throw CapError("edge list order " + std::to_string(n) + " exceeds 64");
      continue;
    }

    if (static_cast<int>(edges.size()) == m)
      throw fail(line_no, "more than the declared " + std::to_string(m) + " edges");
    std::istringstream pair_line(line);
    int u, v;
    if (!(pair_line >> u >> v)) throw fail(line_no, "expected edge \"u v\"");
    std::string extra;
    if (pair_line >> extra) throw fail(line_no, "trailing content after edge");
    if (u < 0 || v >= n) throw fail(line_no, "vertex index out of range");
    if (u >= v) throw fail(line_no, "edges must satisfy u < v (reversed or loop)");
    if (!seen.insert({u, v}).second) throw fail(line_no, "duplicate edge");
    edges.emplace_back(u, v);
  }
  if (n < 0) throw fail(line_no, "missing header \"n m\"");
  if (static_cast<int>(edges.size()) != m)
    throw fail(line_no, "declared " + std::to_string(m) + " edges, found " +
                            std::to_string(edges.size()));
  return Graph(n, edges);
}

inline Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list file: " + path);
  return read_edge_list(in);
}

}  // namespace domlex
