#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "domlex/catalog.hpp"
#include "domlex/domination.hpp"
#include "domlex/graph.hpp"
#include "domlex/polynomial.hpp"
#include "naive_oracle.hpp"

using namespace domlex;

TEST_CASE("closed neighborhoods") {
  auto k1 = closed_neighborhoods(empty_graph(1));
  REQUIRE(k1.size() == 1);
  CHECK(k1[0].mask == 0b1);

  auto p3 = closed_neighborhoods(path_graph(3));
  REQUIRE(p3.size() == 3);
  CHECK(p3[0].mask == 0b011);
  CHECK(p3[1].mask == 0b111);
  CHECK(p3[2].mask == 0b110);

  for (VertexSet s : closed_neighborhoods(complete_graph(5))) CHECK(s.mask == 0b11111);
}

TEST_CASE("is_dominating") {
  Graph p4 = path_graph(4);
  CHECK(is_dominating(p4, VertexSet{0b1010}));   // {1, 3}
  CHECK_FALSE(is_dominating(p4, VertexSet{0b1100}));  // {2, 3} leaves 0 uncovered
  CHECK(is_dominating(p4, VertexSet{p4.vertex_mask()}));
  CHECK(is_dominating(empty_graph(0), VertexSet{0}));
  CHECK_FALSE(is_dominating(path_graph(2), VertexSet{0}));
  CHECK_THROWS_AS(is_dominating(p4, VertexSet{0b10000}), std::out_of_range);
}

TEST_CASE("domination is closed under supersets") {
  Graph g = cycle_graph(6);
  for (std::uint64_t base = 0; base < 64; ++base) {
    VertexSet s{base};
    if (!is_dominating(g, s)) continue;
    for (int extra = 0; extra < 6; ++extra)
      CHECK(is_dominating(g, VertexSet{s.mask | (std::uint64_t{1} << extra)}));
  }
}

TEST_CASE("domination polynomial frozen values") {
  CHECK(domination_polynomial(complete_graph(4)) == binomial_shift(4));
  CHECK(domination_polynomial(complete_graph(7)) == binomial_shift(7));
  CHECK(domination_polynomial(empty_graph(5)) == IntPoly::monomial(5));
  CHECK(domination_polynomial(path_graph(4)) == IntPoly({0, 0, 4, 4, 1}));
  CHECK(domination_polynomial(empty_graph(0)) == IntPoly::constant(1));
  Graph two_k3 = disjoint_union(complete_graph(3), complete_graph(3));
  CHECK(domination_polynomial(two_k3) == binomial_shift(3) * binomial_shift(3));
  CHECK_THROWS_AS(domination_polynomial(empty_graph(30)), CapError);
  CHECK(domination_polynomial(empty_graph(27), {.max_order = 27, .threads = 4}).degree() == 27);
}

TEST_CASE("oracle agrees with the naive reference on all small graphs") {
  for (const Graph& g : graph_catalog(5))
    CHECK(domination_polynomial(g) == naive::domination_polynomial(g));
  for (const Graph& g : {path_graph(6), cycle_graph(6), friendship_graph(2), biclique(3, 3)})
    CHECK(domination_polynomial(g) == naive::domination_polynomial(g));
}

TEST_CASE("inclusion-exclusion route equals direct enumeration") {
  CHECK(domination_polynomial_ie(empty_graph(1)) == IntPoly::monomial(1));
  CHECK(domination_polynomial_ie(path_graph(4)) == IntPoly({0, 0, 4, 4, 1}));
  CHECK(domination_polynomial_ie(cycle_graph(5)) == domination_polynomial(cycle_graph(5)));
  for (const Graph& g : graph_catalog(5))
    CHECK(domination_polynomial_ie(g) == domination_polynomial(g));
  for (const Graph& g : {path_graph(6), cycle_graph(6), friendship_graph(2), biclique(3, 3)})
    CHECK(domination_polynomial_ie(g) == domination_polynomial(g));
}

TEST_CASE("domination number") {
  CHECK(domination_number(path_graph(4)) == 2);
  CHECK(domination_number(path_graph(6)) == 2);
  CHECK(domination_number(complete_graph(9)) == 1);
  CHECK(domination_number(empty_graph(7)) == 7);
  for (const Graph& g : graph_catalog(5))
    CHECK(domination_number(g) == naive::domination_number(g));
  CHECK_THROWS_AS(domination_number(empty_graph(0)), std::invalid_argument);
  CHECK_THROWS_AS(domination_number(empty_graph(33)), CapError);
}

TEST_CASE("domination number of the 16- and 24-vertex path products") {
  Graph p4 = path_graph(4), p6 = path_graph(6);
  CHECK(domination_number(lexicographic_product(p4, p4)) == 2);
  CHECK(domination_number(lexicographic_product(p6, p4)) == 4);
}

TEST_CASE("gamma sets") {
  auto p6 = gamma_sets(path_graph(6));
  REQUIRE(p6.size() == 1);
  CHECK(p6[0] == VertexSet{0b010010});  // {1, 4}

  auto p4 = gamma_sets(path_graph(4));
  REQUIRE(p4.size() == 4);
  CHECK(p4[0] == VertexSet{0b0101});  // {0, 2}
  CHECK(p4[1] == VertexSet{0b0110});  // {1, 2}
  CHECK(p4[2] == VertexSet{0b1001});  // {0, 3}
  CHECK(p4[3] == VertexSet{0b1010});  // {1, 3}

  auto k5 = gamma_sets(complete_graph(5));
  REQUIRE(k5.size() == 5);
  for (int v = 0; v < 5; ++v) CHECK(k5[static_cast<std::size_t>(v)].mask == std::uint64_t{1} << v);
}

TEST_CASE("find_dominating_set returns the first witness") {
  auto w = find_dominating_set(path_graph(6), 2);
  REQUIRE(w.has_value());
  CHECK(*w == VertexSet{0b010010});
  CHECK_FALSE(find_dominating_set(path_graph(6), 1).has_value());
}

TEST_CASE("monitor numbers") {
  Graph p4 = path_graph(4), p6 = path_graph(6);
  CHECK(monitor_number_of_set(p4, VertexSet{0b0110}) == 1);  // {1,2} within N[1]
  CHECK(monitor_number_of_set(p6, VertexSet{0b010010}) == 2);
  CHECK(monitor_number_of_set(complete_graph(6), VertexSet{0b111111}) == 1);
  CHECK(monitor_number(p4) == 1);
  CHECK(monitor_number(p6) == 2);
  CHECK(monitor_number(complete_graph(8)) == 1);
  CHECK_THROWS_AS(monitor_number_of_set(p4, VertexSet{0}), std::invalid_argument);

  // agree with the naive reference over the small catalog
  for (const Graph& g : graph_catalog(4)) {
    int naive_best = g.order() + 1;
    for (VertexSet d : gamma_sets(g))
      naive_best = std::min(naive_best, naive::monitor_number_of_set(g, naive::subset_vector(d.mask)));
    CHECK(monitor_number(g) == naive_best);
  }
}

TEST_CASE("gamma equals the lowest nonzero degree of the polynomial") {
  for (const Graph& g : graph_catalog(5)) {
    auto low = min_degree_nonzero(domination_polynomial(g));
    REQUIRE(low.has_value());
    CHECK(*low == domination_number(g));
  }
}

TEST_CASE("evaluation at one counts all dominating sets") {
  for (const Graph& g : graph_catalog(4)) {
    IntPoly p = domination_polynomial(g);
    BigInt total = 0;
    for (const BigInt& c : p.coefficients()) total += c;
    CHECK(evaluate(p, 1) == total);
    // definition-level recount
    BigInt naive_total = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask)
      if (naive::is_dominating(g, naive::subset_vector(mask))) ++naive_total;
    CHECK(total == naive_total);
  }
}

TEST_CASE("random graphs: direct, inclusion-exclusion and naive routes agree") {
  std::mt19937 rng(5150);
  for (int round = 0; round < 60; ++round) {
    std::uniform_int_distribution<int> order_dist(1, 7);
    int n = order_dist(rng);
    std::vector<std::pair<int, int>> edges;
    std::bernoulli_distribution edge_flip(0.4);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (edge_flip(rng)) edges.emplace_back(u, v);
    Graph g(n, edges);

    IntPoly direct = domination_polynomial(g);
    CHECK(direct == domination_polynomial_ie(g));
    CHECK(direct == naive::domination_polynomial(g));
    CHECK(min_degree_nonzero(direct) == domination_number(g));
  }
}

TEST_CASE("union law over catalog pairs") {
  auto catalog = graph_catalog(3);
  for (const Graph& g : catalog)
    for (const Graph& h : catalog)
      CHECK(domination_polynomial(disjoint_union(g, h)) ==
            domination_polynomial(g) * domination_polynomial(h));
}

TEST_CASE("parallel enumeration is identical to serial") {
  std::vector<Graph> graphs = {path_graph(6), lexicographic_product(path_graph(4), path_graph(4)),
                               cycle_graph(6), friendship_graph(3)};
  for (const Graph& g : graphs) {
    IntPoly serial = domination_polynomial(g);
    for (int threads : {2, 3, 4, 7}) {
      IntPoly parallel = domination_polynomial(g, {.max_order = 26, .threads = threads});
      CHECK(parallel == serial);
      CHECK(to_string(parallel) == to_string(serial));
    }
  }
}

TEST_CASE("summary") {
  DominationSummary s = summarize(path_graph(6));
  REQUIRE(s.counts.size() == 7);
  CHECK(s.counts[2] == 1);
  CHECK(s.counts[6] == 1);
  CHECK(s.gamma == 2);
  CHECK(s.iota == 2);
  CHECK(s.gamma_set_count == 1);

  DominationSummary order0 = summarize(empty_graph(0));
  CHECK(order0.counts == std::vector<BigInt>{1});
  CHECK(order0.gamma == 0);
  CHECK_FALSE(order0.iota.has_value());

  for (const Graph& g : graph_catalog(4)) {
    DominationSummary t = summarize(g);
    CHECK(t.counts[static_cast<std::size_t>(g.order())] == 1);  // V dominates
    CHECK(t.counts[0] == 0);
  }
}
