#include "polytope/groups.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "polytope/error.hpp"

namespace polytope {

GroupDescriptor GroupDescriptor::sym(unsigned k) {
  if (k < 1)
    throw Error(ErrorCode::NonPositiveExponent, "Sym(0)");
  GroupDescriptor d;
  d.kind_ = Kind::Sym;
  d.degree_ = k;
  return d;
}

GroupDescriptor GroupDescriptor::hyp(unsigned k) {
  if (k < 1)
    throw Error(ErrorCode::NonPositiveExponent, "Hyp(0)");
  GroupDescriptor d;
  d.kind_ = Kind::Hyp;
  d.degree_ = k;
  return d;
}

GroupDescriptor GroupDescriptor::product(std::vector<GroupDescriptor> factors) {
  GroupDescriptor d;
  d.factors_ = std::move(factors);
  return d;
}

GroupDescriptor times(const GroupDescriptor& a, const GroupDescriptor& b) {
  if (a.is_trivial_product())
    return b;
  if (b.is_trivial_product())
    return a;
  return GroupDescriptor::product({a, b});
}

namespace {

Natural factorial(unsigned k) {
  Natural out = 1;
  for (unsigned i = 2; i <= k; ++i)
    out *= i;
  return out;
}

void flatten(const GroupDescriptor& d, std::vector<GroupDescriptor>& out) {
  switch (d.kind()) {
  case GroupDescriptor::Kind::Product:
    for (const auto& f : d.factors())
      flatten(f, out);
    break;
  case GroupDescriptor::Kind::Sym:
    if (d.degree() > 1)
      out.push_back(d);
    break;
  case GroupDescriptor::Kind::Hyp:
    out.push_back(d);
    break;
  }
}

std::string render_factor(const GroupDescriptor& d) {
  if (d.kind() == GroupDescriptor::Kind::Product && d.factors().size() == 1)
    return render_factor(d.factors().front());
  const bool wrap = (d.kind() == GroupDescriptor::Kind::Hyp && d.degree() > 1) ||
                    (d.kind() == GroupDescriptor::Kind::Product && d.factors().size() > 1);
  return wrap ? "(" + render(d) + ")" : render(d);
}

} // namespace

Natural order(const GroupDescriptor& d) {
  switch (d.kind()) {
  case GroupDescriptor::Kind::Sym:
    return factorial(d.degree());
  case GroupDescriptor::Kind::Hyp:
    return (Natural(1) << d.degree()) * factorial(d.degree());
  case GroupDescriptor::Kind::Product:
    break;
  }
  Natural out = 1;
  for (const auto& f : d.factors())
    out *= order(f);
  return out;
}

GroupDescriptor normalize(const GroupDescriptor& d) {
  std::vector<GroupDescriptor> factors;
  flatten(d, factors);
  std::sort(factors.begin(), factors.end(), [](const GroupDescriptor& a, const GroupDescriptor& b) {
    return std::make_tuple(a.kind(), a.degree()) < std::make_tuple(b.kind(), b.degree());
  });
  if (factors.size() == 1)
    return factors.front();
  return GroupDescriptor::product(std::move(factors));
}

bool equal(const GroupDescriptor& a, const GroupDescriptor& b) {
  return normalize(a) == normalize(b);
}

std::string render(const GroupDescriptor& d) {
  switch (d.kind()) {
  case GroupDescriptor::Kind::Sym:
    return "Sym(" + std::to_string(d.degree()) + ")";
  case GroupDescriptor::Kind::Hyp:
    if (d.degree() == 1)
      return "Z/2Z";
    return "(Z/2Z)^" + std::to_string(d.degree()) + " ⋊ Sym(" + std::to_string(d.degree()) + ")";
  case GroupDescriptor::Kind::Product:
    break;
  }
  if (d.factors().empty())
    return "1";
  if (d.factors().size() == 1)
    return render(d.factors().front());
  std::string out;
  for (const auto& f : d.factors()) {
    if (!out.empty())
      out += " × ";
    out += render_factor(f);
  }
  return out;
}

nlohmann::json to_json(const GroupDescriptor& d) {
  switch (d.kind()) {
  case GroupDescriptor::Kind::Sym:
    return {{"kind", "sym"}, {"k", d.degree()}};
  case GroupDescriptor::Kind::Hyp:
    return {{"kind", "hyp"}, {"k", d.degree()}};
  case GroupDescriptor::Kind::Product:
    break;
  }
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : d.factors())
    factors.push_back(to_json(f));
  return {{"kind", "prod"}, {"factors", factors}};
}

GroupDescriptor descriptor_from_json(const nlohmann::json& j) {
  try {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "sym")
      return GroupDescriptor::sym(j.at("k").get<unsigned>());
    if (kind == "hyp")
      return GroupDescriptor::hyp(j.at("k").get<unsigned>());
    if (kind == "prod") {
      std::vector<GroupDescriptor> factors;
      for (const auto& f : j.at("factors"))
        factors.push_back(descriptor_from_json(f));
      return GroupDescriptor::product(std::move(factors));
    }
    throw Error(ErrorCode::BadFormat, "unknown descriptor kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::BadFormat, e.what());
  }
}

nlohmann::json natural_json(const Natural& n) {
  if (n <= std::numeric_limits<std::uint64_t>::max())
    return n.convert_to<std::uint64_t>();
  return n.str();
}

} // namespace polytope
