#include "polytope/io.hpp"

#include <map>
#include <sstream>

#include "polytope/error.hpp"

namespace polytope {

nlohmann::json to_json(const PolytopePoset& p) {
  nlohmann::json elements = nlohmann::json::array();
  for (ElementIndex e = 0; e < p.size(); ++e)
    elements.push_back({{"id", p.id(e)}, {"rank", p.rank_of(e)}});
  nlohmann::json covers = nlohmann::json::array();
  for (const auto& [lo, hi] : p.cover_list())
    covers.push_back({lo, hi});
  return {{"rank", p.rank()}, {"elements", elements}, {"covers", covers}};
}

PolytopePoset poset_from_json(const nlohmann::json& j) {
  std::vector<ElementSpec> elements;
  std::vector<CoverSpec> covers;
  int declared_rank = 0;
  try {
    declared_rank = j.at("rank").get<int>();
    for (const auto& e : j.at("elements"))
      elements.push_back({e.at("id").get<std::string>(), e.at("rank").get<int>()});
    for (const auto& c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2)
        throw Error(ErrorCode::BadFormat, "cover must be a pair of ids");
      covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::BadFormat, e.what());
  }
  PolytopePoset p = PolytopePoset::from_components(std::move(elements), covers);
  if (p.rank() != declared_rank)
    throw Error(ErrorCode::NotBounded, "declared rank " + std::to_string(declared_rank) +
                                           " but the maximal element has rank " + std::to_string(p.rank()));
  return p;
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out + "\"";
}

} // namespace

std::string to_dot(const PolytopePoset& p) {
  std::ostringstream out;
  out << "digraph polytope {\n  rankdir=BT;\n";
  std::map<int, std::vector<ElementIndex>> by_rank;
  for (ElementIndex e = 0; e < p.size(); ++e) {
    out << "  " << quote(p.id(e)) << " [label=" << quote(p.id(e) + ":" + std::to_string(p.rank_of(e))) << "];\n";
    by_rank[p.rank_of(e)].push_back(e);
  }
  for (const auto& [rank, members] : by_rank) {
    out << "  { rank=same;";
    for (ElementIndex e : members)
      out << ' ' << quote(p.id(e)) << ';';
    out << " }\n";
  }
  for (const auto& [lo, hi] : p.cover_list())
    out << "  " << quote(lo) << " -> " << quote(hi) << ";\n";
  out << "}\n";
  return out.str();
}

} // namespace polytope
