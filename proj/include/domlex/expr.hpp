#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "domlex/errors.hpp"
#include "domlex/graph.hpp"

namespace domlex {

enum class Family { kComplete, kPath, kCycle, kEmpty, kStar, kFriendship, kBiclique };
enum class ExprOp { kUnion, kJoin, kLex, kComp };

// Parse tree of the graph expression language:
//   expr := atom | "lex(" expr "," expr ")" | "join(" expr ("," expr)+ ")"
//         | "union(" expr ("," expr)+ ")" | "comp(" expr ")"
//   atom := "K"n | "P"n | "C"n | "E"n | "S"n | "F"n | "B(" m "," n ")"
// Whitespace-insensitive; atoms and operator keywords are case-sensitive.
struct GraphExpr {
  enum class Kind { kFamily, kOp };

  Kind kind = Kind::kFamily;
  Family family = Family::kEmpty;
  int param_a = 0;
  int param_b = 0;  // biclique only
  ExprOp op = ExprOp::kComp;
  std::vector<GraphExpr> children;

  static GraphExpr make_family(Family f, int a, int b = 0) {
    GraphExpr e;
    e.kind = Kind::kFamily;
    e.family = f;
    e.param_a = a;
    e.param_b = b;
    return e;
  }

  static GraphExpr make_op(ExprOp op, std::vector<GraphExpr> children) {
    GraphExpr e;
    e.kind = Kind::kOp;
    e.op = op;
    e.children = std::move(children);
    return e;
  }

  friend bool operator==(const GraphExpr&, const GraphExpr&) = default;
};

inline std::string render(const GraphExpr& e) {
  std::ostringstream out;
  if (e.kind == GraphExpr::Kind::kFamily) {
    switch (e.family) {
      case Family::kComplete: out << "K" << e.param_a; break;
      case Family::kPath: out << "P" << e.param_a; break;
      case Family::kCycle: out << "C" << e.param_a; break;
      case Family::kEmpty: out << "E" << e.param_a; break;
      case Family::kStar: out << "S" << e.param_a; break;
      case Family::kFriendship: out << "F" << e.param_a; break;
      case Family::kBiclique: out << "B(" << e.param_a << "," << e.param_b << ")"; break;
    }
  } else {
    switch (e.op) {
      case ExprOp::kUnion: out << "union"; break;
      case ExprOp::kJoin: out << "join"; break;
      case ExprOp::kLex: out << "lex"; break;
      case ExprOp::kComp: out << "comp"; break;
    }
    out << "(";
    for (std::size_t i = 0; i < e.children.size(); ++i) {
      if (i) out << ",";
      out << render(e.children[i]);
    }
    out << ")";
  }
  return out.str();
}

namespace detail {

class ExprParser {
public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  GraphExpr parse() {
    GraphExpr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters after expression");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  int parse_int() {
    skip_ws();
    std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) {
        pos_ = start;
        fail("integer parameter too large");
      }
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return static_cast<int>(value);
  }

  GraphExpr parse_family(char letter) {
    std::size_t start = pos_;
    ++pos_;  // the family letter
    if (letter == 'B') {
      expect('(');
      int m = parse_int();
      expect(',');
      int n = parse_int();
      expect(')');
      if (m < 0 || n < 0 || m + n > Graph::kMaxOrder) {
        pos_ = start;
        fail("biclique parameters out of range (need m,n >= 0, m+n <= 64)");
      }
      return GraphExpr::make_family(Family::kBiclique, m, n);
    }
    int n = parse_int();
    auto check = [&](bool ok, const char* msg) {
      if (!ok) {
        pos_ = start;
        fail(msg);
      }
    };
    switch (letter) {
      case 'K':
        check(n <= Graph::kMaxOrder, "complete graph parameter out of range (0..64)");
        return GraphExpr::make_family(Family::kComplete, n);
      case 'P':
        check(n <= Graph::kMaxOrder, "path parameter out of range (0..64)");
        return GraphExpr::make_family(Family::kPath, n);
      case 'C':
        check(n >= 3 && n <= Graph::kMaxOrder, "cycle parameter out of range (3..64)");
        return GraphExpr::make_family(Family::kCycle, n);
      case 'E':
        check(n <= Graph::kMaxOrder, "empty graph parameter out of range (0..64)");
        return GraphExpr::make_family(Family::kEmpty, n);
      case 'S':
        check(n <= Graph::kMaxOrder - 1, "star parameter out of range (0..63)");
        return GraphExpr::make_family(Family::kStar, n);
      case 'F':
        check(n >= 1 && 2 * n + 1 <= Graph::kMaxOrder,
              "friendship parameter out of range (1..31)");
        return GraphExpr::make_family(Family::kFriendship, n);
      default: fail("unknown family atom");
    }
  }

  GraphExpr parse_keyword_op() {
    std::size_t start = pos_;
    std::string word;
    while (pos_ < text_.size() && std::islower(static_cast<unsigned char>(text_[pos_])))
      word.push_back(text_[pos_++]);

    ExprOp op;
    std::size_t min_arity, max_arity;
    if (word == "lex") {
      op = ExprOp::kLex;
      min_arity = max_arity = 2;
    } else if (word == "comp") {
      op = ExprOp::kComp;
      min_arity = max_arity = 1;
    } else if (word == "join") {
      op = ExprOp::kJoin;
      min_arity = 2;
      max_arity = SIZE_MAX;
    } else if (word == "union") {
      op = ExprOp::kUnion;
      min_arity = 2;
      max_arity = SIZE_MAX;
    } else {
      pos_ = start;
      fail("unknown operator '" + word + "'");
    }

    expect('(');
    std::vector<GraphExpr> children;
    children.push_back(parse_expr());
    while (eat(',')) children.push_back(parse_expr());
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ',' or ')'");
    ++pos_;
    if (children.size() > max_arity) {
      pos_ = start;
      fail("operator '" + word + "' takes " + std::to_string(max_arity) + " arguments");
    }
    if (children.size() < min_arity) {
      pos_ = start;
      fail("operator '" + word + "' needs at least " + std::to_string(min_arity) +
           " arguments");
    }
    return GraphExpr::make_op(op, std::move(children));
  }

  GraphExpr parse_expr() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected an expression");
    char c = text_[pos_];
    if (c == 'K' || c == 'P' || c == 'C' || c == 'E' || c == 'S' || c == 'F' || c == 'B')
      return parse_family(c);
    if (std::islower(static_cast<unsigned char>(c))) return parse_keyword_op();
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline GraphExpr parse_expr(std::string_view text) {
  return detail::ExprParser(text).parse();
}

// Builds the graph bottom-up; order overflow names the offending
// subexpression.
inline Graph eval_expr(const GraphExpr& e) {
  if (e.kind == GraphExpr::Kind::kFamily) {
    switch (e.family) {
      case Family::kComplete: return complete_graph(e.param_a);
      case Family::kPath: return path_graph(e.param_a);
      case Family::kCycle: return cycle_graph(e.param_a);
      case Family::kEmpty: return empty_graph(e.param_a);
      case Family::kStar: return star_graph(e.param_a);
      case Family::kFriendship: return friendship_graph(e.param_a);
      case Family::kBiclique: return biclique(e.param_a, e.param_b);
    }
  }
  std::vector<Graph> parts;
  parts.reserve(e.children.size());
  for (const GraphExpr& child : e.children) parts.push_back(eval_expr(child));

  auto overflow = [&](long long order) -> CapError {
    return CapError("order " + std::to_string(order) + " of subexpression '" +
                    render(e) + "' exceeds 64");
  };
  switch (e.op) {
    case ExprOp::kComp: return complement(parts[0]);
    case ExprOp::kLex: {
      long long order = static_cast<long long>(parts[0].order()) * parts[1].order();
      if (order > Graph::kMaxOrder) throw overflow(order);
      return lexicographic_product(parts[0], parts[1]);
    }
    case ExprOp::kUnion:
    case ExprOp::kJoin: {
      long long order = 0;
      for (const Graph& p : parts) order += p.order();
      if (order > Graph::kMaxOrder) throw overflow(order);
      Graph result = parts[0];
      for (std::size_t i = 1; i < parts.size(); ++i)
        result = e.op == ExprOp::kUnion ? disjoint_union(result, parts[i])
                                        : join(result, parts[i]);
      return result;
    }
  }
  throw std::logic_error("unhandled expression node");
}

}  // namespace domlex
