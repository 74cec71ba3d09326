#include "polytope/verify.hpp"

#include <algorithm>
#include <deque>

namespace polytope {

namespace {

template <typename T>
void note(std::vector<T>& list, T item) {
  if (list.size() < ValidityReport::kMaxListed)
    list.push_back(std::move(item));
}

void check_bounds(const PolytopePoset& p, ValidityReport& r) {
  for (ElementIndex e = 0; e < p.size(); ++e) {
    const bool minimal = p.down_covers(e).empty();
    const bool maximal = p.up_covers(e).empty();
    if (minimal && e != p.bottom()) {
      r.bounded = false;
      note(r.extra_minimal, p.id(e));
    }
    if (maximal && e != p.top()) {
      r.bounded = false;
      note(r.extra_maximal, p.id(e));
    }
    // Covers raise rank by one, so a maximal chain from a minimal x to a
    // maximal y has rank(y) - rank(x) + 1 elements.
    if ((minimal && p.rank_of(e) != -1) || (maximal && p.rank_of(e) != p.rank())) {
      r.graded = false;
      note(r.short_chains, p.id(e));
    }
  }
}

void check_diamonds(const PolytopePoset& p, ValidityReport& r) {
  std::vector<std::size_t> middles(p.size(), 0);
  std::vector<ElementIndex> touched;
  for (ElementIndex f = 0; f < p.size(); ++f) {
    touched.clear();
    for (ElementIndex h : p.up_covers(f))
      for (ElementIndex g : p.up_covers(h)) {
        if (middles[g]++ == 0)
          touched.push_back(g);
      }
    std::sort(touched.begin(), touched.end());
    for (ElementIndex g : touched) {
      if (middles[g] != 2) {
        r.diamond_ok = false;
        note(r.diamond_violations, Violation{p.id(f), p.id(g), middles[g]});
      }
      middles[g] = 0;
    }
  }
}

std::size_t proper_components(const PolytopePoset& p, ElementIndex f, ElementIndex g) {
  Bitset proper = p.up_set(f) & p.down_set(g);
  proper.reset(f);
  proper.reset(g);
  std::size_t components = 0;
  std::deque<ElementIndex> queue;
  for (auto start = proper.find_first(); start != Bitset::npos; start = proper.find_next(start)) {
    ++components;
    proper.reset(start);
    queue.push_back(static_cast<ElementIndex>(start));
    while (!queue.empty()) {
      const ElementIndex x = queue.front();
      queue.pop_front();
      for (auto nbrs : {p.up_covers(x), p.down_covers(x)})
        for (ElementIndex y : nbrs)
          if (proper.test(y)) {
            proper.reset(y);
            queue.push_back(y);
          }
    }
  }
  return components;
}

void check_connectivity(const PolytopePoset& p, ValidityReport& r) {
  for (ElementIndex f = 0; f < p.size(); ++f) {
    const Bitset& above = p.up_set(f);
    for (auto g = above.find_first(); g != Bitset::npos; g = above.find_next(g)) {
      const auto upper = static_cast<ElementIndex>(g);
      if (p.rank_of(upper) - p.rank_of(f) < 3)
        continue;
      const std::size_t components = proper_components(p, f, upper);
      if (components != 1) {
        r.connected_ok = false;
        note(r.disconnected_sections, Violation{p.id(f), p.id(upper), components});
      }
    }
  }
}

nlohmann::json violation_json(const char* check, const Violation& v, const char* detail_name) {
  return {{"check", check}, {"lower", v.lower}, {"upper", v.upper}, {detail_name, v.detail}};
}

} // namespace

ValidityReport verify_polytope(const PolytopePoset& p) {
  ValidityReport r;
  check_bounds(p, r);
  check_diamonds(p, r);
  check_connectivity(p, r);
  r.is_polytope = r.bounded && r.graded && r.diamond_ok && r.connected_ok;
  return r;
}

nlohmann::json to_json(const ValidityReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& id : report.extra_minimal)
    failures.push_back({{"check", "bounded"}, {"element", id}, {"problem", "extra minimal element"}});
  for (const auto& id : report.extra_maximal)
    failures.push_back({{"check", "bounded"}, {"element", id}, {"problem", "extra maximal element"}});
  for (const auto& id : report.short_chains)
    failures.push_back({{"check", "graded"}, {"element", id}, {"problem", "maximal chain of wrong length"}});
  for (const auto& v : report.diamond_violations)
    failures.push_back(violation_json("diamond", v, "middle_count"));
  for (const auto& v : report.disconnected_sections)
    failures.push_back(violation_json("connectivity", v, "components"));
  return {{"is_polytope", report.is_polytope},
          {"bounded", report.bounded},
          {"graded", report.graded},
          {"diamond_ok", report.diamond_ok},
          {"connected_ok", report.connected_ok},
          {"failures", failures}};
}

} // namespace polytope
