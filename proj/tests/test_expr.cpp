#include <catch2/catch_amalgamated.hpp>

#include "domlex/expr.hpp"
#include "domlex/graph.hpp"
#include "domlex/isomorphism.hpp"

using namespace domlex;

TEST_CASE("atoms") {
  CHECK(eval_expr(parse_expr("K5")) == complete_graph(5));
  CHECK(eval_expr(parse_expr("P4")) == path_graph(4));
  CHECK(eval_expr(parse_expr("C6")) == cycle_graph(6));
  CHECK(eval_expr(parse_expr("E3")) == empty_graph(3));
  CHECK(eval_expr(parse_expr("S3")) == star_graph(3));
  CHECK(eval_expr(parse_expr("F2")) == friendship_graph(2));
  CHECK(eval_expr(parse_expr("B(2,3)")) == biclique(2, 3));
}

TEST_CASE("operators") {
  CHECK(eval_expr(parse_expr("lex(P6,P4)")) ==
        lexicographic_product(path_graph(6), path_graph(4)));
  CHECK(eval_expr(parse_expr("union(K2,K2,K2)")) ==
        disjoint_union(disjoint_union(complete_graph(2), complete_graph(2)),
                       complete_graph(2)));
  CHECK(eval_expr(parse_expr("comp(K4)")) == empty_graph(4));
  // join(K1, union(K2,K2)) builds F2
  CHECK(is_isomorphic(eval_expr(parse_expr("join(K1,union(K2,K2))")), friendship_graph(2)));
  // left unit of order one is exact
  CHECK(eval_expr(parse_expr("lex(E1,P4)")) == path_graph(4));
  CHECK(is_isomorphic(eval_expr(parse_expr("lex(K2,E2)")), biclique(2, 2)));
}

TEST_CASE("whitespace is ignored") {
  CHECK(parse_expr(" lex( P6 , P4 ) ") == parse_expr("lex(P6,P4)"));
  CHECK(parse_expr("B( 2 , 3 )") == parse_expr("B(2,3)"));
}

TEST_CASE("render/parse round trip") {
  for (const char* text :
       {"K5", "P0", "C3", "E64", "S0", "F31", "B(0,4)", "lex(P6,P4)",
        "join(K1,union(K2,K2))", "comp(lex(P3,K2))", "union(E1,E2,E3,E4)",
        "lex(lex(K2,K2),lex(E2,E2))", "join(S3,F2,B(1,1))"}) {
    GraphExpr e = parse_expr(text);
    CHECK(parse_expr(render(e)) == e);
    CHECK(render(parse_expr(render(e))) == render(e));
  }
}

TEST_CASE("syntax errors carry the byte offset") {
  auto offset_of = [](const char* text) {
    try {
      parse_expr(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1L;
  };
  CHECK(offset_of("lex(P6,P4") == 9);    // missing ')'
  CHECK(offset_of("lex(P6 P4)") == 7);   // missing ','
  CHECK(offset_of("K") == 1);            // missing integer
  CHECK(offset_of("Q4") == 0);           // unknown atom
  CHECK(offset_of("lox(P4,P4)") == 0);   // unknown operator
  CHECK(offset_of("  C2") == 2);         // family range error points at the atom
  CHECK(offset_of("lex(P4,P4)x") == 10); // trailing characters
  CHECK_THROWS_AS(parse_expr(""), ParseError);
}

TEST_CASE("family parameter ranges") {
  CHECK_THROWS_AS(parse_expr("C2"), ParseError);
  CHECK_THROWS_AS(parse_expr("K65"), ParseError);
  CHECK_THROWS_AS(parse_expr("F0"), ParseError);
  CHECK_THROWS_AS(parse_expr("F32"), ParseError);
  CHECK_THROWS_AS(parse_expr("S64"), ParseError);
  CHECK_THROWS_AS(parse_expr("B(60,10)"), ParseError);
  CHECK(eval_expr(parse_expr("K0")).order() == 0);
  CHECK(eval_expr(parse_expr("S0")) == empty_graph(1));
}

TEST_CASE("arity rules") {
  CHECK_THROWS_AS(parse_expr("lex(P4)"), ParseError);
  CHECK_THROWS_AS(parse_expr("lex(P4,P4,P4)"), ParseError);
  CHECK_THROWS_AS(parse_expr("comp(K2,K2)"), ParseError);
  CHECK_THROWS_AS(parse_expr("union(K2)"), ParseError);
  CHECK_THROWS_AS(parse_expr("join(K2)"), ParseError);
}

TEST_CASE("order overflow names the offending subexpression") {
  GraphExpr e = parse_expr("union(K1,lex(K32,K32))");
  try {
    eval_expr(e);
    FAIL("expected CapError");
  } catch (const CapError& err) {
    CHECK(std::string(err.what()).find("lex(K32,K32)") != std::string::npos);
  }
  CHECK_THROWS_AS(eval_expr(parse_expr("join(K32,K32,K32)")), CapError);
  CHECK(eval_expr(parse_expr("lex(K8,K8)")).order() == 64);
}
