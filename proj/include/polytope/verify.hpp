#ifndef POLYTOPE_VERIFY_HPP
#define POLYTOPE_VERIFY_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "polytope/poset.hpp"

namespace polytope {

/// Interval G/F that breaks a check. `detail` is the number of middle
/// elements (diamond) or of connected components (connectivity).
struct Violation {
  std::string lower;
  std::string upper;
  std::size_t detail = 0;
};

struct ValidityReport {
  static constexpr std::size_t kMaxListed = 20;

  bool bounded = true;
  bool graded = true;
  bool diamond_ok = true;
  bool connected_ok = true;
  bool is_polytope = true;

  std::vector<std::string> extra_minimal;  // minimal elements other than the rank -1 element
  std::vector<std::string> extra_maximal;
  std::vector<std::string> short_chains;   // endpoints of maximal chains of the wrong length
  std::vector<Violation> diamond_violations;
  std::vector<Violation> disconnected_sections;
};

/// Checks boundedness, gradedness, the diamond condition and strong connectivity.
ValidityReport verify_polytope(const PolytopePoset& p);

nlohmann::json to_json(const ValidityReport& report);

} // namespace polytope

#endif // POLYTOPE_VERIFY_HPP
