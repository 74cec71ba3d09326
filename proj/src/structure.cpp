#include "polytope/structure.hpp"

#include "polytope/error.hpp"
#include "polytope/morphism.hpp"
#include "polytope/products.hpp"

namespace polytope {

namespace {

bool share_edge(const PolytopePoset& p, ElementIndex a, ElementIndex b) {
  for (ElementIndex e : p.up_covers(a))
    if (p.covers(b, e))
      return true;
  return false;
}

// Elements not above the apex, as a poset of their own; absent if that set
// violates the structural invariants.
std::optional<PolytopePoset> base_without_apex(const PolytopePoset& p, ElementIndex apex) {
  const Bitset& above = p.up_set(apex);
  std::vector<ElementIndex> local(p.size(), 0);
  std::vector<ElementSpec> elements;
  std::vector<std::optional<Origin>> provenance;
  for (ElementIndex e = 0; e < p.size(); ++e) {
    if (above.test(e))
      continue;
    local[e] = static_cast<ElementIndex>(elements.size());
    elements.push_back({p.id(e), p.rank_of(e)});
    provenance.push_back(p.origin(e));
  }
  std::vector<IndexCover> covers;
  for (ElementIndex e = 0; e < p.size(); ++e) {
    if (above.test(e))
      continue;
    for (ElementIndex u : p.up_covers(e))
      if (!above.test(u))
        covers.emplace_back(local[e], local[u]);
  }
  try {
    return PolytopePoset::from_indexed(std::move(elements), std::move(covers), std::move(provenance));
  } catch (const Error&) {
    return std::nullopt;
  }
}

} // namespace

std::vector<std::string> pyramid_apex_candidates(const PolytopePoset& p) {
  const auto vertices = p.elements_of_rank(0);
  std::vector<std::string> out;
  if (p.rank() < 1)
    return out;
  for (ElementIndex v0 : vertices) {
    bool all = true;
    for (ElementIndex v : vertices)
      if (v != v0 && !share_edge(p, v0, v)) {
        all = false;
        break;
      }
    if (all)
      out.push_back(p.id(v0));
  }
  return out;
}

std::optional<PolytopePoset> pyramid_decompose(const PolytopePoset& p, const SearchLimits& limits) {
  if (p.rank() < 1)
    return std::nullopt;
  if (p.size() > limits.max_elements)
    throw Error(ErrorCode::SearchBudgetExceeded, "pyramid test on " + std::to_string(p.size()) + " elements");
  for (const auto& apex : pyramid_apex_candidates(p)) {
    auto base = base_without_apex(p, p.index_of(apex));
    if (!base || base->rank() != p.rank() - 1 || 2 * base->size() != p.size())
      continue;
    if (is_isomorphic(join(*base, point()), p, limits))
      return base;
  }
  return std::nullopt;
}

std::optional<PolytopePoset> prism_decompose(const PolytopePoset& p, const SearchLimits& limits) {
  if (p.rank() < 1)
    return std::nullopt;
  if (p.size() > limits.max_elements)
    throw Error(ErrorCode::SearchBudgetExceeded, "prism test on " + std::to_string(p.size()) + " elements");
  for (ElementIndex facet : p.elements_of_rank(p.rank() - 1)) {
    PolytopePoset base = section(p, p.bottom(), facet).carrier;
    if (product_size(Product::Cartesian, base.size(), edge().size()) != p.size())
      continue;
    if (is_isomorphic(cartesian(base, edge()), p, limits))
      return base;
  }
  return std::nullopt;
}

} // namespace polytope
