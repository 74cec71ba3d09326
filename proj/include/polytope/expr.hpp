#ifndef POLYTOPE_EXPR_HPP
#define POLYTOPE_EXPR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polytope/family.hpp"
#include "polytope/poset.hpp"

namespace polytope {

/// AST of construction expressions such as "((I*pt)x(I^x3))*(pt^*2)".
class ConstructionExpr {
public:
  enum class Kind { Point, Edge, Join, Cart, JoinPow, CartPow };

  static ConstructionExpr point();
  static ConstructionExpr edge();
  static ConstructionExpr join(ConstructionExpr left, ConstructionExpr right);
  static ConstructionExpr cart(ConstructionExpr left, ConstructionExpr right);
  static ConstructionExpr join_pow(ConstructionExpr base, int k);
  static ConstructionExpr cart_pow(ConstructionExpr base, int k);

  Kind kind() const noexcept { return kind_; }
  bool is_atom() const noexcept { return kind_ == Kind::Point || kind_ == Kind::Edge; }
  bool is_binary() const noexcept { return kind_ == Kind::Join || kind_ == Kind::Cart; }
  bool is_power() const noexcept { return kind_ == Kind::JoinPow || kind_ == Kind::CartPow; }

  const ConstructionExpr& left() const { return operands_.at(0); }
  const ConstructionExpr& right() const { return operands_.at(1); }
  const ConstructionExpr& base() const { return operands_.at(0); }
  int exponent() const noexcept { return exponent_; }

  bool operator==(const ConstructionExpr&) const = default;

private:
  Kind kind_ = Kind::Point;
  std::vector<ConstructionExpr> operands_;
  int exponent_ = 0;
};

/**
 * expr := pow { ("*" | "x") pow }    left-associative; one operator per chain
 * pow  := atom [ "^*" nat | "^x" nat ]
 * atom := "pt" | "I" | "(" expr ")"
 *
 * Whitespace is ignored. Throws ParseError (code ParseError or
 * MixedOperatorsWithoutParens) carrying the offending position.
 */
ConstructionExpr parse_expr(std::string_view text);

/// Minimal-parenthesis rendering that parses back to the same tree.
std::string render(const ConstructionExpr& e);

/// Number of faces of the result, saturating at UINT64_MAX.
std::uint64_t expr_size(const ConstructionExpr& e);

/// Builds and verifies the face lattice. Throws BudgetExceeded above
/// limits.max_elements and InvalidPolytope if verification fails.
PolytopePoset eval_expr(const ConstructionExpr& e, const SearchLimits& limits = {});

/// Construction history when the expression is literally I followed by
/// steps "x I" / "* pt" (powers of I or pt on the right expand to runs).
std::optional<std::vector<Step>> expr_to_path(const ConstructionExpr& e);
std::optional<FamilyNode> expr_to_family(const ConstructionExpr& e, const SearchLimits& limits = {});

} // namespace polytope

#endif // POLYTOPE_EXPR_HPP
