#ifndef POLYTOPE_MORPHISM_HPP
#define POLYTOPE_MORPHISM_HPP

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polytope/poset.hpp"

namespace polytope {

/// mapping[e] is the image in the target poset of source element e.
using Mapping = std::vector<ElementIndex>;

/// Return false to stop the enumeration.
using MappingVisitor = std::function<bool(std::span<const ElementIndex>)>;

/**
 * Enumerate every rank-preserving bijection from -> to that maps the cover
 * relation onto the cover relation (equivalently a <= b iff f(a) <= f(b)).
 *
 * Backtracking assigns elements in a fixed order in which each element after
 * the first of its component is adjacent in the Hasse diagram to an already
 * assigned "anchor" of low degree. Candidates are the matching neighbours of
 * the anchor's image filtered by signature (rank, |down-set|, |up-set|, cover
 * degrees). Returns the number of mappings visited.
 *
 * Throws SearchBudgetExceeded if either poset exceeds limits.max_elements.
 */
std::size_t for_each_isomorphism(const PolytopePoset& from, const PolytopePoset& to,
                                 const MappingVisitor& visit, const SearchLimits& limits = {});

std::optional<Mapping> is_isomorphic(const PolytopePoset& p, const PolytopePoset& q,
                                     const SearchLimits& limits = {});

std::map<std::string, std::string> mapping_ids(const PolytopePoset& from, const PolytopePoset& to,
                                               std::span<const ElementIndex> mapping);

/// Checks the isomorphism property directly against the order relation.
bool is_order_isomorphism(const PolytopePoset& from, const PolytopePoset& to,
                          std::span<const ElementIndex> mapping);

} // namespace polytope

#endif // POLYTOPE_MORPHISM_HPP
