#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "domlex/catalog.hpp"
#include "domlex/graph.hpp"
#include "domlex/isomorphism.hpp"

using namespace domlex;

TEST_CASE("isomorphism positives") {
  CHECK(is_isomorphic(lexicographic_product(complete_graph(2), empty_graph(2)),
                      biclique(2, 2)));
  // K_{1,n}[G] with G = K2: star(2)[K2] vs K2 v 2K2
  CHECK(is_isomorphic(lexicographic_product(star_graph(2), complete_graph(2)),
                      join(complete_graph(2),
                           disjoint_union(complete_graph(2), complete_graph(2)))));
  // relabeled path
  Graph relabeled(4, std::vector<std::pair<int, int>>{{2, 0}, {0, 3}, {3, 1}});
  CHECK(is_isomorphic(relabeled, path_graph(4)));
}

TEST_CASE("isomorphism negatives") {
  CHECK_FALSE(is_isomorphic(complete_graph(3), path_graph(3)));
  CHECK_FALSE(is_isomorphic(path_graph(4), star_graph(3)));  // same degree sums
  CHECK_FALSE(is_isomorphic(complete_graph(3), complete_graph(4)));
  // same degree sequence, different structure: C6 vs 2C3
  CHECK_FALSE(is_isomorphic(cycle_graph(6),
                            disjoint_union(cycle_graph(3), cycle_graph(3))));
}

TEST_CASE("random relabelings are isomorphic") {
  std::mt19937 rng(31337);
  std::bernoulli_distribution edge_flip(0.5);
  std::uniform_int_distribution<int> order_dist(1, 8);
  for (int round = 0; round < 40; ++round) {
    int n = order_dist(rng);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (edge_flip(rng)) edges.emplace_back(u, v);
    Graph g(n, edges);

    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) perm[static_cast<std::size_t>(v)] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<int, int>> relabeled;
    for (auto [u, v] : edges)
      relabeled.emplace_back(perm[static_cast<std::size_t>(u)],
                             perm[static_cast<std::size_t>(v)]);
    CHECK(is_isomorphic(g, Graph(n, relabeled)));
  }
}

TEST_CASE("order-zero graphs are isomorphic") {
  CHECK(is_isomorphic(empty_graph(0), empty_graph(0)));
}

TEST_CASE("isomorphism order limit") {
  CHECK_THROWS_AS(is_isomorphic(empty_graph(11), empty_graph(11)), CapError);
  CHECK(is_isomorphic(empty_graph(11), empty_graph(11), 12));
  // Unequal orders answer false without a search, whatever the size.
  CHECK_FALSE(is_isomorphic(empty_graph(30), empty_graph(31)));
}

TEST_CASE("catalog sizes match the known isomorphism-class counts") {
  CHECK(enumerate_graphs(0).size() == 1);
  CHECK(enumerate_graphs(1).size() == 1);
  CHECK(enumerate_graphs(2).size() == 2);
  CHECK(enumerate_graphs(3).size() == 4);
  CHECK(enumerate_graphs(4).size() == 11);
  CHECK(enumerate_graphs(5).size() == 34);
  CHECK(enumerate_graphs(6).size() == 156);
  CHECK_THROWS_AS(enumerate_graphs(7), CapError);
}

TEST_CASE("catalog members are pairwise non-isomorphic") {
  auto graphs = enumerate_graphs(4);
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = i + 1; j < graphs.size(); ++j)
      CHECK_FALSE(is_isomorphic(graphs[i], graphs[j]));
}

TEST_CASE("catalog order is deterministic") {
  auto a = enumerate_graphs(4);
  auto b = enumerate_graphs(4);
  CHECK(a == b);
  CHECK(graph_catalog(3).size() == 7);
}

TEST_CASE("describe_graph names the families") {
  CHECK(describe_graph(complete_graph(3)) == "K3");
  CHECK(describe_graph(empty_graph(2)) == "E2");
  CHECK(describe_graph(empty_graph(1)) == "K1");
  CHECK(describe_graph(path_graph(4)) == "P4");
  CHECK(describe_graph(cycle_graph(5)) == "C5");
  CHECK(describe_graph(star_graph(3)) == "S3");
  CHECK(describe_graph(biclique(2, 3)) == "B(2,3)");
  CHECK(describe_graph(friendship_graph(2)) == "F2");
  CHECK(describe_graph(disjoint_union(complete_graph(2), complete_graph(2))) == "2K2");
  CHECK(describe_graph(disjoint_union(complete_graph(2), empty_graph(1))) == "K1+K2");
}
