#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "domlex/polynomial.hpp"

namespace domlex {

// The closed-form domination-polynomial identities, plus the refuted
// composition candidate. Formulas work on (order, polynomial) data only, so
// they compose symbolically without building product graphs.
enum class FormulaId {
  kUnionProduct,
  kJoin,
  kLexEmptyLeft,
  kLexCompleteComplete,
  kLexCompleteLeft,
  kLexStarLeft,
  kLexFriendshipLeft,
  kLexCompleteRight,
  kFalseIdentity,
};

inline constexpr std::string_view to_string(FormulaId id) {
  switch (id) {
    case FormulaId::kUnionProduct: return "union-product";
    case FormulaId::kJoin: return "join";
    case FormulaId::kLexEmptyLeft: return "lex-empty-left";
    case FormulaId::kLexCompleteComplete: return "lex-complete-complete";
    case FormulaId::kLexCompleteLeft: return "lex-complete-left";
    case FormulaId::kLexStarLeft: return "lex-star-left";
    case FormulaId::kLexFriendshipLeft: return "lex-friendship-left";
    case FormulaId::kLexCompleteRight: return "lex-complete-right";
    case FormulaId::kFalseIdentity: return "false-identity";
  }
  return "?";
}

inline std::optional<FormulaId> formula_from_string(std::string_view name) {
  for (FormulaId id :
       {FormulaId::kUnionProduct, FormulaId::kJoin, FormulaId::kLexEmptyLeft,
        FormulaId::kLexCompleteComplete, FormulaId::kLexCompleteLeft,
        FormulaId::kLexStarLeft, FormulaId::kLexFriendshipLeft,
        FormulaId::kLexCompleteRight, FormulaId::kFalseIdentity})
    if (name == to_string(id)) return id;
  return std::nullopt;
}

// D of a disjoint union is the product over the components.
inline IntPoly union_product(std::span<const IntPoly> parts) {
  if (parts.empty()) throw std::invalid_argument("union_product needs >= 1 part");
  IntPoly result = IntPoly::constant(1);
  for (const IntPoly& p : parts) result *= p;
  return result;
}

// D of the join of k graphs with orders n_1..n_k:
//   sum_{j=1}^{k-1} ((1+x)^{n_j} - 1) ((1+x)^{n_{j+1}+...+n_k} - 1)
//   + sum_i D(G_i, x).
inline IntPoly join_formula(std::span<const int> orders, std::span<const IntPoly> polys) {
  if (orders.size() != polys.size())
    throw std::invalid_argument("join_formula: orders/polys length mismatch");
  if (orders.empty()) throw std::invalid_argument("join_formula needs >= 1 graph");
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (polys[i].degree() > orders[i])
      throw std::invalid_argument("join_formula: polynomial degree exceeds order");

  IntPoly result;
  int suffix = 0;
  for (std::size_t i = 0; i < orders.size(); ++i) suffix += orders[i];
  for (std::size_t j = 0; j + 1 < orders.size(); ++j) {
    suffix -= orders[j];
    result += binomial_shift(orders[j]) * binomial_shift(suffix);
  }
  for (const IntPoly& p : polys) result += p;
  return result;
}

// D((nK_1)[G], x) = D(G, x)^n.
inline IntPoly lex_empty_left(int n, const IntPoly& d_g) {
  if (n < 1) throw std::invalid_argument("lex_empty_left requires n >= 1");
  return power(d_g, n);
}

// D(K_m[K_n], x) = (1+x)^{mn} - 1.
inline IntPoly lex_complete_complete(int m, int n) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("lex_complete_complete requires m, n >= 1");
  return binomial_shift(m * n);
}

// D(K_m[G], x) = ((1+x)^{|V(G)|} - 1) * sum_{j=1}^{m-1} ((1+x)^{(m-j)|V(G)|} - 1)
//                + m * D(G, x).   (m = 1 gives D(G, x): the sum is empty.)
inline IntPoly lex_complete_left(int m, int g_order, const IntPoly& d_g) {
  if (m < 1) throw std::invalid_argument("lex_complete_left requires m >= 1");
  if (g_order < 0 || d_g.degree() > g_order)
    throw std::invalid_argument("lex_complete_left: polynomial degree exceeds order");
  IntPoly sum;
  for (int j = 1; j <= m - 1; ++j) sum += binomial_shift((m - j) * g_order);
  return binomial_shift(g_order) * sum + IntPoly::constant(m) * d_g;
}

// D(K_{1,n}[G], x) = ((1+x)^{|V(G)|} - 1)((1+x)^{n|V(G)|} - 1)
//                    + D(G, x) + D(G, x)^n.
inline IntPoly lex_star_left(int n, int g_order, const IntPoly& d_g) {
  if (n < 1) throw std::invalid_argument("lex_star_left requires n >= 1");
  if (g_order < 0 || d_g.degree() > g_order)
    throw std::invalid_argument("lex_star_left: polynomial degree exceeds order");
  return binomial_shift(g_order) * binomial_shift(n * g_order) + d_g + power(d_g, n);
}

// D(F_n[G], x) = ((1+x)^{|V(G)|} - 1)((1+x)^{2n|V(G)|} - 1) + D(G, x)
//                + (((1+x)^{|V(G)|} - 1)^2 + 2 D(G, x))^n.
inline IntPoly lex_friendship_left(int n, int g_order, const IntPoly& d_g) {
  if (n < 1) throw std::invalid_argument("lex_friendship_left requires n >= 1");
  if (g_order < 0 || d_g.degree() > g_order)
    throw std::invalid_argument("lex_friendship_left: polynomial degree exceeds order");
  IntPoly shift = binomial_shift(g_order);
  IntPoly triangle_block = shift * shift + IntPoly::constant(2) * d_g;
  return shift * binomial_shift(2 * n * g_order) + d_g + power(triangle_block, n);
}

// D(G[K_n], x) = D(G, D(K_n, x)) = D(G, (1+x)^n - 1).
inline IntPoly lex_complete_right(const IntPoly& d_g, int n) {
  if (n < 1) throw std::invalid_argument("lex_complete_right requires n >= 1");
  return compose(d_g, binomial_shift(n));
}

// The refuted candidate D(G, D(H, x) - 1). It agrees with D(G[H], x) when H
// is complete but fails in general; the hunt exhibits mismatches.
inline IntPoly false_identity_probe(const IntPoly& d_g, const IntPoly& d_h) {
  return compose(d_g, d_h - IntPoly::constant(1));
}

}  // namespace domlex
