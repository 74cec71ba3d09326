#ifndef POLYTOPE_IO_HPP
#define POLYTOPE_IO_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "polytope/poset.hpp"

namespace polytope {

/// {"rank": n, "elements": [{"id", "rank"}], "covers": [[lower, upper]]}, covers sorted.
nlohmann::json to_json(const PolytopePoset& p);

/// Throws BadFormat on schema errors, otherwise the errors of from_components().
PolytopePoset poset_from_json(const nlohmann::json& j);

/// Nodes labelled "id:rank", one edge per cover, one rank=same group per rank.
std::string to_dot(const PolytopePoset& p);

} // namespace polytope

#endif // POLYTOPE_IO_HPP
