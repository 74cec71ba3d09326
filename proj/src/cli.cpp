#include "polytope/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "polytope/autom.hpp"
#include "polytope/error.hpp"
#include "polytope/expr.hpp"
#include "polytope/family.hpp"
#include "polytope/io.hpp"
#include "polytope/structure.hpp"
#include "polytope/verify.hpp"

namespace polytope::cli {

namespace {

struct Options {
  SearchLimits limits;

  std::string expression;
  std::string out_format = "json";
  std::string out_file;
  std::string json_file;
  std::string method;
  std::string shape;
  unsigned steps = 0;
  bool json = false;
};

void emit(const std::string& text, const std::string& file, std::ostream& out) {
  if (file.empty()) {
    out << text;
    return;
  }
  std::ofstream f(file);
  if (!f)
    throw Error(ErrorCode::BadFormat, "cannot write '" + file + "'");
  f << text;
}

int cmd_build(const Options& o, std::ostream& out) {
  const PolytopePoset p = eval_expr(parse_expr(o.expression), o.limits);
  emit(o.out_format == "dot" ? to_dot(p) : to_json(p).dump(2) + "\n", o.out_file, out);
  return kSuccess;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  PolytopePoset p = point();
  if (!o.json_file.empty()) {
    std::ifstream f(o.json_file);
    if (!f)
      throw Error(ErrorCode::BadFormat, "cannot read '" + o.json_file + "'");
    nlohmann::json j;
    try {
      f >> j;
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::BadFormat, e.what());
    }
    p = poset_from_json(j);
  } else if (!o.expression.empty()) {
    p = eval_expr(parse_expr(o.expression), o.limits);
  } else {
    err << "verify: give an expression or --json FILE\n";
    return kParseError;
  }
  const ValidityReport report = verify_polytope(p);
  out << to_json(report).dump(2) << "\n";
  return report.is_polytope ? kSuccess : kInvalidPolytope;
}

int cmd_aut(const Options& o, std::ostream& out, std::ostream& err) {
  const ConstructionExpr e = parse_expr(o.expression);
  const auto path = expr_to_path(e);
  std::string method = o.method;
  if (method.empty()) {
    method = path ? "formula" : "brute";
    if (!path)
      err << "note: not a prism/pyramid construction from I, falling back to brute force\n";
  }
  if (!path && method != "brute") {
    err << "aut: --method " << method << " needs an expression of the form I followed by x I / * pt steps\n";
    return kNotFamily;
  }

  out << "expression: " << render(e) << "\n";
  std::optional<FamilyNode> node;
  std::optional<Natural> formula_order;
  if (path) {
    node = node_for_path(*path, o.limits);
    const GroupDescriptor formula = aut_formula(*node);
    formula_order = order(formula);
    out << "construction: " << render_path(node->path) << "\n";
    out << "k: " << node->run << "\nprod: " << to_string(node->last) << "\n";
    out << "descriptor: " << render(formula) << "\n";
    out << "normal form: " << render(normalize(formula)) << "\n";
  }
  out << "method: " << method << "\n";
  if (method == "formula") {
    out << "order: " << formula_order->str() << "\n";
    return kSuccess;
  }

  std::uint64_t computed = 0;
  if (method == "brute") {
    computed = aut_order(eval_expr(e, o.limits), o.limits);
  } else {
    if (!node->polytope)
      throw Error(ErrorCode::BudgetExceeded, "face lattice exceeds the cap");
    computed = closure(described_generators(*node), node->polytope->size(), o.limits.max_closure);
  }
  out << "order: " << computed << "\n";
  if (formula_order)
    out << "formula agrees: " << (Natural(computed) == *formula_order ? "yes" : "no") << "\n";
  return kSuccess;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const PolytopePoset p = eval_expr(parse_expr(o.expression), o.limits);
  const auto base = o.shape == "pyramid" ? pyramid_decompose(p, o.limits) : prism_decompose(p, o.limits);
  if (!base)
    out << "none\n";
  else
    out << to_json(*base).dump(2) << "\n";
  return kSuccess;
}

int cmd_family(const Options& o, std::ostream& out) {
  const auto nodes = enumerate(o.steps, o.limits);
  if (o.json) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& n : nodes)
      list.push_back(to_json(n));
    out << list.dump(2) << "\n";
    return kSuccess;
  }
  for (const auto& n : nodes) {
    const GroupDescriptor formula = aut_formula(n);
    out << render_path(n.path) << "\n"
        << "  k=" << n.run << " prod=" << to_string(n.last) << " A=" << render(n.saved) << "\n"
        << "  Aut = " << render(formula) << "  (order " << order(formula).str() << ", " << n.element_count
        << " faces)\n";
  }
  return kSuccess;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Abstract polytopes built by joins and Cartesian products, and their automorphism groups",
               "polyaut"};
  app.require_subcommand(1);
  app.add_option("--max-elements", o.limits.max_elements, "Face cap for lattices and brute-force searches")
      ->capture_default_str();
  app.add_option("--max-closure", o.limits.max_closure, "Cap on generated group size")->capture_default_str();

  auto* build = app.add_subcommand("build", "Print the face lattice of an expression");
  build->add_option("expr", o.expression, "Construction expression, e.g. \"(I*pt)x I\"")->required();
  build->add_option("--out", o.out_format, "Output format")->check(CLI::IsMember({"json", "dot"}));
  build->add_option("-o", o.out_file, "Write to FILE instead of stdout");

  auto* verify = app.add_subcommand("verify", "Check the abstract polytope axioms");
  verify->add_option("expr", o.expression, "Construction expression");
  verify->add_option("--json", o.json_file, "Read a poset in JSON format instead");

  auto* aut = app.add_subcommand("aut", "Automorphism group");
  aut->add_option("expr", o.expression, "Construction expression")->required();
  aut->add_option("--method", o.method, "formula | brute | generators")
      ->check(CLI::IsMember({"formula", "brute", "generators"}));

  auto* decompose = app.add_subcommand("decompose", "Find Q with P = Q * pt or P = Q x I");
  decompose->add_option("expr", o.expression, "Construction expression")->required();
  decompose->add_option("--as", o.shape, "pyramid | prism")->required()->check(CLI::IsMember({"pyramid", "prism"}));

  auto* family = app.add_subcommand("family", "List the nodes of the prism/pyramid family at a depth");
  family->add_option("--steps", o.steps, "Depth below the edge I")->required();
  family->add_flag("--json", o.json, "JSON output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*build)
      return cmd_build(o, out);
    if (*verify)
      return cmd_verify(o, out, err);
    if (*aut)
      return cmd_aut(o, out, err);
    if (*decompose)
      return cmd_decompose(o, out);
    return cmd_family(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
    case ErrorCode::ParseError:
    case ErrorCode::MixedOperatorsWithoutParens:
    case ErrorCode::BadFormat:
      return kParseError;
    case ErrorCode::BudgetExceeded:
    case ErrorCode::SearchBudgetExceeded:
    case ErrorCode::ClosureBudgetExceeded:
      return kBudgetExceeded;
    default:
      return kInvalidPolytope;
    }
  }
}

} // namespace polytope::cli
