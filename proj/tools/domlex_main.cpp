// Command-line front end: evaluate graph expressions or edge-list files,
// compute domination polynomials and numbers, verify the closed-form laws
// against the enumeration oracle, and hunt for composition counterexamples.
//
// Exit codes: 0 success / all-pass / isomorphic; 1 verification failure or
// not-isomorphic; 2 usage or parse error; 3 cap exceeded.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "domlex/domlex.hpp"

namespace {

using nlohmann::ordered_json;

struct GraphInput {
  std::string expr_text;  // positional expression, empty if --edge-list used
  std::string edge_list_path;

  std::string label() const { return edge_list_path.empty() ? expr_text : edge_list_path; }
};

void add_graph_input(CLI::App* cmd, GraphInput& input) {
  cmd->add_option("expr", input.expr_text, "graph expression, e.g. \"lex(P6,P4)\"");
  cmd->add_option("--edge-list", input.edge_list_path, "read the graph from an edge-list file");
  cmd->callback([&input, cmd] {
    if (input.expr_text.empty() == input.edge_list_path.empty())
      throw CLI::ValidationError(cmd->get_name(),
                                 "provide exactly one of <expr> or --edge-list");
  });
}

domlex::Graph load_graph(const GraphInput& input) {
  if (!input.edge_list_path.empty())
    return domlex::read_edge_list_file(input.edge_list_path);
  return domlex::eval_expr(domlex::parse_expr(input.expr_text));
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "expected \"a\" or \"a..b\", got \"" + text + "\"");
  }
}

ordered_json vertex_set_json(domlex::VertexSet s) {
  ordered_json arr = ordered_json::array();
  for (std::uint64_t rest = s.mask; rest; rest &= rest - 1)
    arr.push_back(std::countr_zero(rest));
  return arr;
}

ordered_json poly_json(const domlex::IntPoly& p) {
  ordered_json arr = ordered_json::array();
  for (const std::string& c : domlex::coefficient_strings(p)) arr.push_back(c);
  return arr;
}

// ---- poly -------------------------------------------------------------------

struct PolyArgs {
  GraphInput input;
  std::string formula;
  bool json = false;
  int max_order = domlex::kDefaultEnumerationCap;
  int threads = 1;
};

// Closed-form dispatch over the parsed expression shape. Returns the formula
// value plus the (order, edges) of the graph the expression denotes, which
// may be larger than anything the oracle could enumerate.
struct FormulaResult {
  domlex::IntPoly poly;
  long long order = 0;
  long long edges = 0;
};

FormulaResult apply_formula(domlex::FormulaId id, const domlex::GraphExpr& expr,
                            const domlex::OracleOptions& oracle) {
  using namespace domlex;
  auto inapplicable = [&]() -> std::invalid_argument {
    return std::invalid_argument("formula '" + std::string(to_string(id)) +
                                 "' does not apply to expression '" + render(expr) + "'");
  };
  auto is_family = [](const GraphExpr& e, Family f) {
    return e.kind == GraphExpr::Kind::kFamily && e.family == f;
  };
  auto oracle_side = [&](const GraphExpr& e) {
    Graph g = eval_expr(e);
    return std::pair<Graph, IntPoly>(g, domination_polynomial(g, oracle));
  };
  // Edge count of L[R] from |E(L)|, |L|, |E(R)|, |R|.
  auto lex_stats = [](long long lo, long long le, long long ro, long long re) {
    return std::pair<long long, long long>(lo * ro, le * ro * ro + lo * re);
  };

  if (expr.kind != GraphExpr::Kind::kOp) throw inapplicable();

  if (id == FormulaId::kUnionProduct || id == FormulaId::kJoin) {
    if (expr.op != (id == FormulaId::kUnionProduct ? ExprOp::kUnion : ExprOp::kJoin))
      throw inapplicable();
    std::vector<int> orders;
    std::vector<IntPoly> polys;
    long long total_order = 0, total_edges = 0;
    for (const GraphExpr& child : expr.children) {
      auto [g, d] = oracle_side(child);
      if (id == FormulaId::kJoin) total_edges += total_order * g.order();  // cross edges
      orders.push_back(g.order());
      polys.push_back(d);
      total_order += g.order();
      total_edges += edge_count(g);
    }
    IntPoly value = id == FormulaId::kUnionProduct ? union_product(polys)
                                                   : join_formula(orders, polys);
    return {value, total_order, total_edges};
  }

  if (expr.op != ExprOp::kLex) throw inapplicable();
  const GraphExpr& left = expr.children[0];
  const GraphExpr& right = expr.children[1];

  switch (id) {
    case FormulaId::kLexEmptyLeft: {
      if (!is_family(left, Family::kEmpty)) throw inapplicable();
      auto [g, d] = oracle_side(right);
      auto [o, e] = lex_stats(left.param_a, 0, g.order(), edge_count(g));
      return {lex_empty_left(left.param_a, d), o, e};
    }
    case FormulaId::kLexCompleteComplete: {
      if (!is_family(left, Family::kComplete) || !is_family(right, Family::kComplete))
        throw inapplicable();
      long long m = left.param_a, n = right.param_a;
      auto [o, e] = lex_stats(m, m * (m - 1) / 2, n, n * (n - 1) / 2);
      return {lex_complete_complete(left.param_a, right.param_a), o, e};
    }
    case FormulaId::kLexCompleteLeft: {
      if (!is_family(left, Family::kComplete)) throw inapplicable();
      auto [g, d] = oracle_side(right);
      long long m = left.param_a;
      auto [o, e] = lex_stats(m, m * (m - 1) / 2, g.order(), edge_count(g));
      return {lex_complete_left(left.param_a, g.order(), d), o, e};
    }
    case FormulaId::kLexStarLeft: {
      if (!is_family(left, Family::kStar)) throw inapplicable();
      auto [g, d] = oracle_side(right);
      long long n = left.param_a;
      auto [o, e] = lex_stats(n + 1, n, g.order(), edge_count(g));
      return {lex_star_left(left.param_a, g.order(), d), o, e};
    }
    case FormulaId::kLexFriendshipLeft: {
      if (!is_family(left, Family::kFriendship)) throw inapplicable();
      auto [g, d] = oracle_side(right);
      long long n = left.param_a;
      auto [o, e] = lex_stats(2 * n + 1, 3 * n, g.order(), edge_count(g));
      return {lex_friendship_left(left.param_a, g.order(), d), o, e};
    }
    case FormulaId::kLexCompleteRight: {
      if (!is_family(right, Family::kComplete)) throw inapplicable();
      auto [g, d] = oracle_side(left);
      long long n = right.param_a;
      auto [o, e] = lex_stats(g.order(), edge_count(g), n, n * (n - 1) / 2);
      return {lex_complete_right(d, right.param_a), o, e};
    }
    case FormulaId::kFalseIdentity: {
      auto [g, dg] = oracle_side(left);
      auto [h, dh] = oracle_side(right);
      auto [o, e] = lex_stats(g.order(), edge_count(g), h.order(), edge_count(h));
      return {false_identity_probe(dg, dh), o, e};
    }
    default: throw inapplicable();
  }
}

int run_poly(const PolyArgs& args) {
  using namespace domlex;
  OracleOptions oracle{args.max_order, args.threads};

  IntPoly poly;
  long long order = 0, edges = 0;
  std::optional<int> gamma_value;
  std::optional<int> iota_value;
  std::string label;

  if (!args.formula.empty()) {
    auto id = formula_from_string(args.formula);
    if (!id) throw std::invalid_argument("unknown formula id: " + args.formula);
    if (args.input.expr_text.empty())
      throw std::invalid_argument("--formula requires an expression input");
    GraphExpr expr = parse_expr(args.input.expr_text);
    label = render(expr);
    FormulaResult r = apply_formula(*id, expr, oracle);
    poly = std::move(r.poly);
    order = r.order;
    edges = r.edges;
    gamma_value = min_degree_nonzero(poly);
  } else {
    Graph g = load_graph(args.input);
    label = args.input.edge_list_path.empty() ? render(parse_expr(args.input.expr_text))
                                              : args.input.edge_list_path;
    poly = domination_polynomial(g, oracle);
    order = g.order();
    edges = edge_count(g);
    DominationSummary summary = summarize(g, oracle);
    gamma_value = summary.gamma;
    iota_value = summary.iota;
  }

  if (args.json) {
    ordered_json out;
    out["expr"] = label;
    out["order"] = order;
    out["edges"] = edges;
    out["polynomial"] = poly_json(poly);
    out["gamma"] = gamma_value ? ordered_json(*gamma_value) : ordered_json(nullptr);
    out["iota"] = iota_value ? ordered_json(*iota_value) : ordered_json(nullptr);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "D(" << label << ", x) = " << to_string(poly) << "\n";
  }
  return 0;
}

// ---- gamma / iota -----------------------------------------------------------

struct ScanArgs {
  GraphInput input;
  bool json = false;
  int max_order = domlex::kDefaultScanCap;
};

int run_gamma(const ScanArgs& args) {
  using namespace domlex;
  Graph g = load_graph(args.input);
  int gamma = domination_number(g, args.max_order);
  VertexSet witness = *find_dominating_set(g, gamma, args.max_order);
  if (args.json) {
    ordered_json out;
    out["expr"] = args.input.label();
    out["gamma"] = gamma;
    out["witness"] = vertex_set_json(witness);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "gamma(" << args.input.label() << ") = " << gamma << "\n";
    std::cout << "witness = " << to_string(witness) << "\n";
  }
  return 0;
}

int run_iota(const ScanArgs& args) {
  using namespace domlex;
  Graph g = load_graph(args.input);
  int iota = monitor_number(g, args.max_order);
  // First minimum dominating set attaining iota, and its first monitor set.
  VertexSet gamma_witness{}, monitor_witness{};
  for (VertexSet d : gamma_sets(g, args.max_order)) {
    if (monitor_number_of_set(g, d, args.max_order) == iota) {
      gamma_witness = d;
      monitor_witness = *find_monitor_set(g, d, iota, args.max_order);
      break;
    }
  }
  if (args.json) {
    ordered_json out;
    out["expr"] = args.input.label();
    out["iota"] = iota;
    out["gamma_set"] = vertex_set_json(gamma_witness);
    out["monitor"] = vertex_set_json(monitor_witness);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "iota(" << args.input.label() << ") = " << iota << "\n";
    std::cout << "gamma-set = " << to_string(gamma_witness)
              << ", monitor = " << to_string(monitor_witness) << "\n";
  }
  return 0;
}

// ---- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string law;
  std::string m_range, n_range;
  int g_catalog = -1, h_catalog = -1;
  bool json = false;
  int max_order = domlex::kDefaultEnumerationCap;
  int threads = 1;
};

int run_verify(const VerifyArgs& args) {
  using namespace domlex;
  VerifyOptions opts;
  if (!args.m_range.empty()) opts.m_range = parse_range(args.m_range);
  if (!args.n_range.empty()) opts.n_range = parse_range(args.n_range);
  if (args.g_catalog >= 0) opts.g_catalog_order = args.g_catalog;
  if (args.h_catalog >= 0) opts.h_catalog_order = args.h_catalog;
  opts.oracle = OracleOptions{args.max_order, args.threads};

  std::vector<VerificationReport> reports = run_law(args.law, opts);
  std::size_t passed = 0;
  for (const auto& r : reports) passed += r.pass;

  if (args.json) {
    ordered_json out;
    out["law"] = args.law;
    out["instances"] = reports.size();
    out["passed"] = passed;
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) {
      ordered_json item;
      item["instance"] = r.instance;
      item["formula"] = r.formula_value;
      item["oracle"] = r.oracle_value;
      item["pass"] = r.pass;
      arr.push_back(std::move(item));
    }
    out["reports"] = std::move(arr);
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& r : reports) {
      if (r.pass) {
        std::cout << "PASS " << r.law << ": " << r.instance << "\n";
      } else {
        std::cout << "FAIL " << r.law << ": " << r.instance
                  << " | formula = " << r.formula_value
                  << " | oracle = " << r.oracle_value << "\n";
      }
    }
    std::cout << args.law << ": " << passed << "/" << reports.size() << " passed\n";
  }
  return passed == reports.size() ? 0 : 1;
}

// ---- hunt -------------------------------------------------------------------

struct HuntArgs {
  int g_catalog = 4, h_catalog = 3;
  bool json = false;
  int max_order = domlex::kDefaultEnumerationCap;
  int threads = 1;
};

int run_hunt_cmd(const HuntArgs& args) {
  using namespace domlex;
  HuntResult result =
      run_hunt(args.g_catalog, args.h_catalog, OracleOptions{args.max_order, args.threads});
  bool demonstrated = !result.counterexamples.empty() &&
                      result.confirmations == result.complete_h_pairs;
  if (args.json) {
    ordered_json out;
    out["pairs_tested"] = result.pairs_tested;
    ordered_json arr = ordered_json::array();
    for (const auto& c : result.counterexamples) {
      ordered_json item;
      item["g"] = c.g_desc;
      item["h"] = c.h_desc;
      item["probe"] = poly_json(c.probe);
      item["oracle"] = poly_json(c.oracle);
      arr.push_back(std::move(item));
    }
    out["counterexamples"] = std::move(arr);
    out["complete_h_pairs"] = result.complete_h_pairs;
    out["confirmations"] = result.confirmations;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "pairs tested: " << result.pairs_tested << "\n";
    std::cout << "counterexamples to D(G[H],x) = D(G, D(H,x) - 1): "
              << result.counterexamples.size() << "\n";
    for (const auto& c : result.counterexamples)
      std::cout << "  G=" << c.g_desc << ", H=" << c.h_desc
                << ": probe = " << to_string(c.probe)
                << ", oracle = " << to_string(c.oracle) << "\n";
    std::cout << "composition law D(G[K_n],x) = D(G,(1+x)^n - 1): "
              << result.confirmations << "/" << result.complete_h_pairs
              << " confirmed\n";
  }
  return demonstrated ? 0 : 1;
}

// ---- iso --------------------------------------------------------------------

struct IsoArgs {
  std::string expr1, expr2;
  bool json = false;
  int max_order = domlex::kDefaultIsoLimit;
};

int run_iso(const IsoArgs& args) {
  using namespace domlex;
  Graph a = eval_expr(parse_expr(args.expr1));
  Graph b = eval_expr(parse_expr(args.expr2));
  bool iso = is_isomorphic(a, b, args.max_order);
  if (args.json) {
    ordered_json out;
    out["isomorphic"] = iso;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << (iso ? "isomorphic" : "not isomorphic") << "\n";
  }
  return iso ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"domination polynomials of graph compositions"};
  app.require_subcommand(1);

  PolyArgs poly_args;
  auto* poly_cmd = app.add_subcommand("poly", "domination polynomial of a graph");
  add_graph_input(poly_cmd, poly_args.input);
  poly_cmd->add_option("--formula", poly_args.formula,
                       "closed-form id to use instead of enumeration");
  poly_cmd->add_flag("--json", poly_args.json, "emit JSON");
  poly_cmd->add_option("--max-order", poly_args.max_order, "enumeration cap (default 26)")
      ->check(CLI::Range(0, 64));
  poly_cmd->add_option("--threads", poly_args.threads, "worker threads")
      ->check(CLI::Range(1, 256));

  ScanArgs gamma_args;
  auto* gamma_cmd = app.add_subcommand("gamma", "domination number and a witness");
  add_graph_input(gamma_cmd, gamma_args.input);
  gamma_cmd->add_flag("--json", gamma_args.json, "emit JSON");
  gamma_cmd->add_option("--max-order", gamma_args.max_order, "scan cap (default 32)")
      ->check(CLI::Range(0, 64));

  ScanArgs iota_args;
  auto* iota_cmd = app.add_subcommand("iota", "monitor number and witnesses");
  add_graph_input(iota_cmd, iota_args.input);
  iota_cmd->add_flag("--json", iota_args.json, "emit JSON");
  iota_cmd->add_option("--max-order", iota_args.max_order, "scan cap (default 32)")
      ->check(CLI::Range(0, 64));

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "check a law against the oracle");
  verify_cmd->add_option("law", verify_args.law, "law id")->required();
  verify_cmd->add_option("--m", verify_args.m_range, "parameter range a..b");
  verify_cmd->add_option("--n", verify_args.n_range, "parameter range a..b");
  verify_cmd->add_option("--g-catalog", verify_args.g_catalog, "G catalog max order")
      ->check(CLI::Range(1, 6));
  verify_cmd->add_option("--h-catalog", verify_args.h_catalog, "H catalog max order")
      ->check(CLI::Range(1, 6));
  verify_cmd->add_flag("--json", verify_args.json, "emit JSON");
  verify_cmd->add_option("--max-order", verify_args.max_order, "enumeration cap")
      ->check(CLI::Range(0, 64));
  verify_cmd->add_option("--threads", verify_args.threads, "worker threads")
      ->check(CLI::Range(1, 256));

  HuntArgs hunt_args;
  auto* hunt_cmd = app.add_subcommand(
      "hunt", "search catalog pairs for composition-identity counterexamples");
  hunt_cmd->add_option("--g-catalog", hunt_args.g_catalog, "G catalog max order (default 4)")
      ->check(CLI::Range(1, 6));
  hunt_cmd->add_option("--h-catalog", hunt_args.h_catalog, "H catalog max order (default 3)")
      ->check(CLI::Range(1, 6));
  hunt_cmd->add_flag("--json", hunt_args.json, "emit JSON");
  hunt_cmd->add_option("--max-order", hunt_args.max_order, "enumeration cap")
      ->check(CLI::Range(0, 64));
  hunt_cmd->add_option("--threads", hunt_args.threads, "worker threads")
      ->check(CLI::Range(1, 256));

  IsoArgs iso_args;
  auto* iso_cmd = app.add_subcommand("iso", "isomorphism test for two expressions");
  iso_cmd->add_option("expr1", iso_args.expr1, "first expression")->required();
  iso_cmd->add_option("expr2", iso_args.expr2, "second expression")->required();
  iso_cmd->add_flag("--json", iso_args.json, "emit JSON");
  iso_cmd->add_option("--max-order", iso_args.max_order, "isomorphism limit (default 10)")
      ->check(CLI::Range(0, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors are exit 2; --help is 0
  }

  try {
    if (poly_cmd->parsed()) return run_poly(poly_args);
    if (gamma_cmd->parsed()) return run_gamma(gamma_args);
    if (iota_cmd->parsed()) return run_iota(iota_args);
    if (verify_cmd->parsed()) return run_verify(verify_args);
    if (hunt_cmd->parsed()) return run_hunt_cmd(hunt_args);
    if (iso_cmd->parsed()) return run_iso(iso_args);
  } catch (const domlex::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const domlex::CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
