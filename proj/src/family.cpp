#include "polytope/family.hpp"

namespace polytope {

const char* to_string(Step s) {
  return s == Step::TimesEdge ? "xI" : "*pt";
}

FamilyNode root() {
  FamilyNode node;
  node.polytope = edge();
  node.element_count = edge().size();
  node.saved = GroupDescriptor::trivial();
  node.run = 1;
  node.last = Product::Cartesian;
  return node;
}

FamilyNode child(const FamilyNode& node, Step step, const SearchLimits& limits) {
  FamilyNode out;
  out.path = node.path;
  out.path.push_back(step);

  if (step == Step::TimesEdge) {
    out.last = Product::Cartesian;
    if (node.last == Product::Cartesian) {
      out.saved = node.saved;
      out.run = node.run + 1;
    } else {
      out.saved = times(node.saved, GroupDescriptor::sym(node.run));
      out.run = 1;
    }
  } else {
    out.last = Product::Join;
    if (node.path.empty()) {
      // I = pt * pt, so I * pt is the 2-simplex pt^{*3}.
      out.saved = GroupDescriptor::trivial();
      out.run = 3;
    } else if (node.last == Product::Cartesian) {
      out.saved = times(node.saved, GroupDescriptor::hyp(node.run));
      out.run = 1;
    } else {
      out.saved = node.saved;
      out.run = node.run + 1;
    }
  }

  const Product op = step == Step::TimesEdge ? Product::Cartesian : Product::Join;
  const PolytopePoset& factor = step == Step::TimesEdge ? edge() : point();
  out.element_count = product_size(op, node.element_count, factor.size());
  if (node.polytope && out.element_count <= limits.max_elements)
    out.polytope = apply(op, *node.polytope, factor);
  return out;
}

std::pair<FamilyNode, FamilyNode> children(const FamilyNode& node, const SearchLimits& limits) {
  return {child(node, Step::TimesEdge, limits), child(node, Step::JoinPoint, limits)};
}

FamilyNode node_for_path(const std::vector<Step>& path, const SearchLimits& limits) {
  FamilyNode node = root();
  for (Step s : path)
    node = child(node, s, limits);
  return node;
}

GroupDescriptor aut_formula(const FamilyNode& node) {
  if (node.last == Product::Cartesian)
    return times(node.saved, GroupDescriptor::hyp(node.run));
  return times(node.saved, GroupDescriptor::sym(node.run));
}

GroupDescriptor aut_descriptor(const FamilyNode& node) {
  return normalize(aut_formula(node));
}

std::vector<FamilyNode> enumerate(unsigned steps, const SearchLimits& limits) {
  std::vector<FamilyNode> level{root()};
  for (unsigned depth = 0; depth < steps; ++depth) {
    std::vector<FamilyNode> next;
    next.reserve(level.size() * 2);
    for (const auto& node : level) {
      auto [prism, pyramid] = children(node, limits);
      next.push_back(std::move(prism));
      next.push_back(std::move(pyramid));
    }
    level = std::move(next);
  }
  return level;
}

std::string render_path(const std::vector<Step>& path) {
  std::string out = "I";
  for (Step s : path)
    out += s == Step::TimesEdge ? " x I" : " * pt";
  return out;
}

nlohmann::json to_json(const FamilyNode& node) {
  nlohmann::json path = nlohmann::json::array();
  for (Step s : node.path)
    path.push_back(to_string(s));
  const GroupDescriptor formula = aut_formula(node);
  return {{"path", path},
          {"k", node.run},
          {"prod", to_string(node.last)},
          {"A", to_json(node.saved)},
          {"descriptor", render(formula)},
          {"order", natural_json(order(formula))},
          {"elements", node.element_count},
          {"materialized", node.polytope.has_value()}};
}

} // namespace polytope
