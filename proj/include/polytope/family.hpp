#ifndef POLYTOPE_FAMILY_HPP
#define POLYTOPE_FAMILY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "polytope/groups.hpp"
#include "polytope/poset.hpp"
#include "polytope/products.hpp"

namespace polytope {

/// One step of the construction: prism over the current polytope or pyramid over it.
enum class Step { TimesEdge, JoinPoint };

const char* to_string(Step s); // "xI" / "*pt"

/**
 * A polytope reachable from the edge I by repeated x I and * pt, with the
 * bookkeeping that determines its automorphism group:
 *
 *  - saved: the group of the last block built with the other product
 *    (trivial stands for "none yet"),
 *  - run: length of the current block of the current product,
 *  - last: the product used in the last step.
 *
 * The face lattice is dropped when it would exceed the element cap; the
 * bookkeeping is kept regardless.
 */
struct FamilyNode {
  std::optional<PolytopePoset> polytope;
  std::uint64_t element_count = 0;
  GroupDescriptor saved;
  unsigned run = 1;
  Product last = Product::Cartesian;
  std::vector<Step> path;

  int rank() const { return 1 + static_cast<int>(path.size()); }
};

FamilyNode root();

FamilyNode child(const FamilyNode& node, Step step, const SearchLimits& limits = {});

/// (x I child, * pt child).
std::pair<FamilyNode, FamilyNode> children(const FamilyNode& node, const SearchLimits& limits = {});

/// Walks the path from the root.
FamilyNode node_for_path(const std::vector<Step>& path, const SearchLimits& limits = {});

/// The automorphism group as the nested product the recurrence produces.
GroupDescriptor aut_formula(const FamilyNode& node);

/// normalize(aut_formula(node)).
GroupDescriptor aut_descriptor(const FamilyNode& node);

/// All 2^steps nodes at depth `steps`, x I branch before * pt branch.
std::vector<FamilyNode> enumerate(unsigned steps, const SearchLimits& limits = {});

std::string render_path(const std::vector<Step>& path);

/// {path, k, prod, A, order, descriptor, elements}
nlohmann::json to_json(const FamilyNode& node);

} // namespace polytope

#endif // POLYTOPE_FAMILY_HPP
