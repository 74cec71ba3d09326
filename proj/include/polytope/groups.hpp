#ifndef POLYTOPE_GROUPS_HPP
#define POLYTOPE_GROUPS_HPP

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

namespace polytope {

using Natural = boost::multiprecision::cpp_int;

/**
 * Symbolic group: Sym(k), Hyp(k) = (Z/2Z)^k ⋊ Sym(k), or a direct product.
 *
 * Equality via operator== is on the tree as built; equal() compares normal
 * forms (flattened, trivial factors dropped, factors sorted by kind then k).
 * Hyp(1) stands for Z/2Z and is kept apart from Sym(2).
 */
class GroupDescriptor {
public:
  enum class Kind { Sym, Hyp, Product };

  /// The trivial group (empty direct product).
  GroupDescriptor() = default;

  static GroupDescriptor sym(unsigned k);
  static GroupDescriptor hyp(unsigned k);
  static GroupDescriptor product(std::vector<GroupDescriptor> factors);
  static GroupDescriptor trivial() { return {}; }

  Kind kind() const noexcept { return kind_; }
  unsigned degree() const noexcept { return degree_; }
  const std::vector<GroupDescriptor>& factors() const noexcept { return factors_; }
  bool is_trivial_product() const noexcept { return kind_ == Kind::Product && factors_.empty(); }

  bool operator==(const GroupDescriptor&) const = default;

private:
  Kind kind_ = Kind::Product;
  unsigned degree_ = 0;
  std::vector<GroupDescriptor> factors_;
};

/// a × b with the trivial group as identity on either side.
GroupDescriptor times(const GroupDescriptor& a, const GroupDescriptor& b);

Natural order(const GroupDescriptor& d);
GroupDescriptor normalize(const GroupDescriptor& d);
bool equal(const GroupDescriptor& a, const GroupDescriptor& b);

/// e.g. "(Sym(3) × ((Z/2Z)^3 ⋊ Sym(3))) × Sym(2)"; Hyp(1) renders "Z/2Z", the trivial group "1".
std::string render(const GroupDescriptor& d);

nlohmann::json to_json(const GroupDescriptor& d);
GroupDescriptor descriptor_from_json(const nlohmann::json& j);

/// Orders as JSON numbers when they fit 64 bits, else decimal strings.
nlohmann::json natural_json(const Natural& n);

} // namespace polytope

#endif // POLYTOPE_GROUPS_HPP
