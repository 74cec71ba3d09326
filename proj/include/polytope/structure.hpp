#ifndef POLYTOPE_STRUCTURE_HPP
#define POLYTOPE_STRUCTURE_HPP

#include <optional>
#include <string>
#include <vector>

#include "polytope/poset.hpp"

namespace polytope {

/// Vertices sharing an edge with every other vertex. Every pyramid has at
/// least one (its apex), so an empty result rules out P = Q * pt.
std::vector<std::string> pyramid_apex_candidates(const PolytopePoset& p);

/// Some Q with Q * pt isomorphic to P, found by removing the up-set of an apex candidate.
std::optional<PolytopePoset> pyramid_decompose(const PolytopePoset& p, const SearchLimits& limits = {});

/// Some Q with Q x I isomorphic to P, tried as the lower section of every facet.
std::optional<PolytopePoset> prism_decompose(const PolytopePoset& p, const SearchLimits& limits = {});

} // namespace polytope

#endif // POLYTOPE_STRUCTURE_HPP
