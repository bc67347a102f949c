#include <catch2/catch_amalgamated.hpp>

#include "domlex/catalog.hpp"
#include "domlex/closed_forms.hpp"
#include "domlex/domination.hpp"
#include "domlex/graph.hpp"

using namespace domlex;

namespace {

IntPoly oracle(const Graph& g) { return domination_polynomial(g); }

}  // namespace

TEST_CASE("formula ids round-trip through their names") {
  for (FormulaId id :
       {FormulaId::kUnionProduct, FormulaId::kJoin, FormulaId::kLexEmptyLeft,
        FormulaId::kLexCompleteComplete, FormulaId::kLexCompleteLeft,
        FormulaId::kLexStarLeft, FormulaId::kLexFriendshipLeft,
        FormulaId::kLexCompleteRight, FormulaId::kFalseIdentity})
    CHECK(formula_from_string(to_string(id)) == id);
  CHECK_FALSE(formula_from_string("no-such-formula").has_value());
}

TEST_CASE("union_product") {
  IntPoly xp = IntPoly::monomial(1);
  CHECK(union_product(std::vector<IntPoly>{xp, xp}) == IntPoly::monomial(2));
  IntPoly k3 = binomial_shift(3);
  CHECK(union_product(std::vector<IntPoly>{k3, k3}) == k3 * k3);
  IntPoly p4 = oracle(path_graph(4));
  CHECK(union_product(std::vector<IntPoly>{p4}) == p4);
  CHECK_THROWS_AS(union_product(std::vector<IntPoly>{}), std::invalid_argument);
}

TEST_CASE("join_formula") {
  // two copies of 2K1 give K_{2,2}
  std::vector<int> orders{2, 2};
  std::vector<IntPoly> polys{IntPoly::monomial(2), IntPoly::monomial(2)};
  CHECK(join_formula(orders, polys) == IntPoly({0, 0, 6, 4, 1}));
  CHECK(join_formula(orders, polys) == oracle(biclique(2, 2)));
  // K1 v 3K1 = K_{1,3}
  std::vector<int> star_orders{1, 3};
  std::vector<IntPoly> star_polys{IntPoly::monomial(1), IntPoly::monomial(3)};
  CHECK(join_formula(star_orders, star_polys) == IntPoly({0, 1, 3, 4, 1}));
  CHECK(join_formula(star_orders, star_polys) == oracle(star_graph(3)));
  // single part: the sum over j is empty
  std::vector<int> one{4};
  std::vector<IntPoly> one_poly{oracle(path_graph(4))};
  CHECK(join_formula(one, one_poly) == one_poly[0]);
  std::vector<IntPoly> short_polys{IntPoly::monomial(1)};
  CHECK_THROWS_AS(join_formula(orders, short_polys), std::invalid_argument);
}

TEST_CASE("lex_empty_left") {
  IntPoly p4 = oracle(path_graph(4));
  CHECK(lex_empty_left(1, p4) == p4);
  IntPoly k2 = binomial_shift(2);
  CHECK(lex_empty_left(2, k2) == IntPoly({0, 0, 4, 4, 1}));
  CHECK(lex_empty_left(2, k2) ==
        oracle(lexicographic_product(empty_graph(2), complete_graph(2))));
  CHECK(lex_empty_left(3, IntPoly::monomial(1)) == IntPoly::monomial(3));
  CHECK_THROWS_AS(lex_empty_left(0, p4), std::invalid_argument);
}

TEST_CASE("lex_complete_complete") {
  CHECK(lex_complete_complete(1, 1) == IntPoly::monomial(1));
  CHECK(lex_complete_complete(2, 2) == binomial_shift(4));
  CHECK(lex_complete_complete(2, 3) ==
        oracle(lexicographic_product(complete_graph(2), complete_graph(3))));
}

TEST_CASE("lex_complete_left") {
  IntPoly p4 = oracle(path_graph(4));
  CHECK(lex_complete_left(1, 4, p4) == p4);
  CHECK(lex_complete_left(2, 1, IntPoly::monomial(1)) == IntPoly({0, 2, 1}));
  CHECK(lex_complete_left(2, 2, IntPoly::monomial(2)) ==
        oracle(lexicographic_product(complete_graph(2), empty_graph(2))));
}

TEST_CASE("lex_star_left") {
  CHECK(lex_star_left(2, 1, IntPoly::monomial(1)) == IntPoly({0, 1, 3, 1}));
  CHECK(lex_star_left(2, 1, IntPoly::monomial(1)) == oracle(path_graph(3)));
  CHECK(lex_star_left(3, 1, IntPoly::monomial(1)) == oracle(star_graph(3)));
  IntPoly k2 = binomial_shift(2);
  CHECK(lex_star_left(2, 2, k2) ==
        oracle(lexicographic_product(star_graph(2), complete_graph(2))));
}

TEST_CASE("lex_friendship_left") {
  CHECK(lex_friendship_left(1, 1, IntPoly::monomial(1)) == binomial_shift(3));
  CHECK(lex_friendship_left(2, 1, IntPoly::monomial(1)) == oracle(friendship_graph(2)));
  CHECK(lex_friendship_left(1, 2, IntPoly::monomial(2)) ==
        oracle(lexicographic_product(friendship_graph(1), empty_graph(2))));
}

TEST_CASE("lex_complete_right") {
  IntPoly k2 = binomial_shift(2);
  CHECK(lex_complete_right(k2, 2) == binomial_shift(4));
  IntPoly p3 = oracle(path_graph(3));
  CHECK(lex_complete_right(p3, 1) == p3);
  CHECK(lex_complete_right(p3, 2) ==
        oracle(lexicographic_product(path_graph(3), complete_graph(2))));
}

TEST_CASE("false_identity_probe") {
  // the refuted identity misses D(K_{2,2}) already
  IntPoly probe = false_identity_probe(binomial_shift(2), IntPoly::monomial(2));
  CHECK(probe == IntPoly({-1, 0, 0, 0, 1}));
  CHECK(probe != oracle(lexicographic_product(complete_graph(2), empty_graph(2))));
  // G = K1: the probe is D(H) - 1, always off by the constant
  IntPoly d_h = oracle(path_graph(3));
  CHECK(false_identity_probe(IntPoly::monomial(1), d_h) == d_h - IntPoly::constant(1));
  // even for complete H the probe composes with (1+x)^n - 2, not (1+x)^n - 1
  IntPoly d_g = oracle(path_graph(4));
  for (int n = 1; n <= 3; ++n)
    CHECK(false_identity_probe(d_g, binomial_shift(n)) != lex_complete_right(d_g, n));
}

TEST_CASE("formula/oracle agreement over catalog operands") {
  std::vector<Graph> operands = graph_catalog(3);
  operands.push_back(path_graph(4));
  operands.push_back(cycle_graph(4));
  for (const Graph& g : operands) {
    IntPoly d_g = oracle(g);
    for (int k = 1; k <= 3; ++k) {
      CHECK(lex_empty_left(k, d_g) == oracle(lexicographic_product(empty_graph(k), g)));
      CHECK(lex_complete_left(k, g.order(), d_g) ==
            oracle(lexicographic_product(complete_graph(k), g)));
      CHECK(lex_complete_right(d_g, k) ==
            oracle(lexicographic_product(g, complete_graph(k))));
      if ((k + 1) * g.order() <= kDefaultEnumerationCap)
        CHECK(lex_star_left(k, g.order(), d_g) ==
              oracle(lexicographic_product(star_graph(k), g)));
      if ((2 * k + 1) * g.order() <= kDefaultEnumerationCap)
        CHECK(lex_friendship_left(k, g.order(), d_g) ==
              oracle(lexicographic_product(friendship_graph(k), g)));
    }
  }
}

TEST_CASE("consistency between the complete-graph formulas") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      CHECK(lex_complete_left(m, n, binomial_shift(n)) == lex_complete_complete(m, n));
  IntPoly p4 = oracle(path_graph(4));
  for (int n = 1; n <= 4; ++n) {
    std::vector<IntPoly> copies(static_cast<std::size_t>(n), p4);
    CHECK(lex_empty_left(n, p4) == union_product(copies));
  }
  for (int n = 1; n <= 4; ++n)
    CHECK(lex_star_left(n, 1, IntPoly::monomial(1)) == oracle(star_graph(n)));
}
