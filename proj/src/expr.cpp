#include "polytope/expr.hpp"

#include <cctype>

#include "polytope/error.hpp"
#include "polytope/products.hpp"
#include "polytope/verify.hpp"

namespace polytope {

ConstructionExpr ConstructionExpr::point() {
  return {};
}

ConstructionExpr ConstructionExpr::edge() {
  ConstructionExpr e;
  e.kind_ = Kind::Edge;
  return e;
}

ConstructionExpr ConstructionExpr::join(ConstructionExpr left, ConstructionExpr right) {
  ConstructionExpr e;
  e.kind_ = Kind::Join;
  e.operands_ = {std::move(left), std::move(right)};
  return e;
}

ConstructionExpr ConstructionExpr::cart(ConstructionExpr left, ConstructionExpr right) {
  ConstructionExpr e;
  e.kind_ = Kind::Cart;
  e.operands_ = {std::move(left), std::move(right)};
  return e;
}

ConstructionExpr ConstructionExpr::join_pow(ConstructionExpr base, int k) {
  if (k < 1)
    throw Error(ErrorCode::NonPositiveExponent, "exponent " + std::to_string(k));
  ConstructionExpr e;
  e.kind_ = Kind::JoinPow;
  e.operands_ = {std::move(base)};
  e.exponent_ = k;
  return e;
}

ConstructionExpr ConstructionExpr::cart_pow(ConstructionExpr base, int k) {
  if (k < 1)
    throw Error(ErrorCode::NonPositiveExponent, "exponent " + std::to_string(k));
  ConstructionExpr e;
  e.kind_ = Kind::CartPow;
  e.operands_ = {std::move(base)};
  e.exponent_ = k;
  return e;
}

namespace {

enum class Tok { Point, Edge, Times, Star, Caret, LParen, RParen, Number, End };

struct Token {
  Tok kind;
  std::size_t pos;
  int value = 0;
};

const char* describe(Tok t) {
  switch (t) {
  case Tok::Point: return "'pt'";
  case Tok::Edge: return "'I'";
  case Tok::Times: return "'x'";
  case Tok::Star: return "'*'";
  case Tok::Caret: return "'^'";
  case Tok::LParen: return "'('";
  case Tok::RParen: return "')'";
  case Tok::Number: return "number";
  case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view s) {
  constexpr int kMaxExponent = 1000000;
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (s.substr(i, 2) == "pt") {
      out.push_back({Tok::Point, i});
      i += 2;
    } else if (c == 'I') {
      out.push_back({Tok::Edge, i++});
    } else if (c == 'x') {
      out.push_back({Tok::Times, i++});
    } else if (c == '*') {
      out.push_back({Tok::Star, i++});
    } else if (c == '^') {
      out.push_back({Tok::Caret, i++});
    } else if (c == '(') {
      out.push_back({Tok::LParen, i++});
    } else if (c == ')') {
      out.push_back({Tok::RParen, i++});
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i;
      long long v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + (s[i] - '0');
        if (v > kMaxExponent)
          throw ParseError(ErrorCode::ParseError, start, "exponent too large");
        ++i;
      }
      out.push_back({Tok::Number, start, static_cast<int>(v)});
    } else {
      throw ParseError(ErrorCode::ParseError, i, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, s.size()});
  return out;
}

class Parser {
public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  ConstructionExpr parse() {
    ConstructionExpr e = expr();
    if (peek().kind != Tok::End)
      fail(peek(), "expected an operator or end of input");
    return e;
  }

private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const Token& t, const std::string& what) const {
    throw ParseError(ErrorCode::ParseError, t.pos, what + ", found " + describe(t.kind));
  }

  ConstructionExpr expr() {
    ConstructionExpr left = pow();
    std::optional<Tok> chain;
    while (peek().kind == Tok::Star || peek().kind == Tok::Times) {
      const Token op = next();
      if (chain && *chain != op.kind)
        throw ParseError(ErrorCode::MixedOperatorsWithoutParens, op.pos,
                         "'*' and 'x' mixed without parentheses");
      chain = op.kind;
      ConstructionExpr right = pow();
      left = op.kind == Tok::Star ? ConstructionExpr::join(std::move(left), std::move(right))
                                  : ConstructionExpr::cart(std::move(left), std::move(right));
    }
    return left;
  }

  ConstructionExpr pow() {
    ConstructionExpr base = atom();
    if (peek().kind != Tok::Caret)
      return base;
    next();
    const Token op = next();
    if (op.kind != Tok::Star && op.kind != Tok::Times)
      fail(op, "expected '*' or 'x' after '^'");
    const Token n = next();
    if (n.kind != Tok::Number)
      fail(n, "expected an exponent");
    if (n.value < 1)
      throw ParseError(ErrorCode::ParseError, n.pos, "exponent must be at least 1");
    return op.kind == Tok::Star ? ConstructionExpr::join_pow(std::move(base), n.value)
                                : ConstructionExpr::cart_pow(std::move(base), n.value);
  }

  ConstructionExpr atom() {
    const Token t = next();
    switch (t.kind) {
    case Tok::Point:
      return ConstructionExpr::point();
    case Tok::Edge:
      return ConstructionExpr::edge();
    case Tok::LParen: {
      ConstructionExpr inner = expr();
      if (peek().kind != Tok::RParen)
        fail(peek(), "expected ')'");
      next();
      return inner;
    }
    default:
      fail(t, "expected 'pt', 'I' or '('");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string render_operand(const ConstructionExpr& operand, ConstructionExpr::Kind op, bool on_left) {
  if (operand.is_binary() && !(on_left && operand.kind() == op))
    return "(" + render(operand) + ")";
  return render(operand);
}

} // namespace

ConstructionExpr parse_expr(std::string_view text) {
  return Parser(text).parse();
}

std::string render(const ConstructionExpr& e) {
  using Kind = ConstructionExpr::Kind;
  switch (e.kind()) {
  case Kind::Point:
    return "pt";
  case Kind::Edge:
    return "I";
  case Kind::Join:
  case Kind::Cart:
    return render_operand(e.left(), e.kind(), true) + (e.kind() == Kind::Join ? " * " : " x ") +
           render_operand(e.right(), e.kind(), false);
  case Kind::JoinPow:
  case Kind::CartPow:
    break;
  }
  const std::string base = e.base().is_atom() ? render(e.base()) : "(" + render(e.base()) + ")";
  return base + (e.kind() == Kind::JoinPow ? "^*" : "^x") + std::to_string(e.exponent());
}

std::uint64_t expr_size(const ConstructionExpr& e) {
  using Kind = ConstructionExpr::Kind;
  switch (e.kind()) {
  case Kind::Point:
    return point().size();
  case Kind::Edge:
    return edge().size();
  case Kind::Join:
    return product_size(Product::Join, expr_size(e.left()), expr_size(e.right()));
  case Kind::Cart:
    return product_size(Product::Cartesian, expr_size(e.left()), expr_size(e.right()));
  case Kind::JoinPow:
  case Kind::CartPow:
    break;
  }
  const Product op = e.kind() == Kind::JoinPow ? Product::Join : Product::Cartesian;
  const std::uint64_t base = expr_size(e.base());
  std::uint64_t out = base;
  for (int i = 1; i < e.exponent(); ++i) {
    const std::uint64_t grown = product_size(op, out, base);
    if (grown == out)
      break; // saturated, or a power of pt under x
    out = grown;
  }
  return out;
}

namespace {

PolytopePoset build(const ConstructionExpr& e) {
  using Kind = ConstructionExpr::Kind;
  switch (e.kind()) {
  case Kind::Point:
    return point();
  case Kind::Edge:
    return edge();
  case Kind::Join:
    return join(build(e.left()), build(e.right()));
  case Kind::Cart:
    return cartesian(build(e.left()), build(e.right()));
  case Kind::JoinPow:
    return power(build(e.base()), Product::Join, e.exponent());
  case Kind::CartPow:
    return power(build(e.base()), Product::Cartesian, e.exponent());
  }
  return point();
}

} // namespace

PolytopePoset eval_expr(const ConstructionExpr& e, const SearchLimits& limits) {
  const std::uint64_t size = expr_size(e);
  if (size > limits.max_elements)
    throw Error(ErrorCode::BudgetExceeded, render(e) + " has " + std::to_string(size) + " faces, cap is " +
                                               std::to_string(limits.max_elements));
  PolytopePoset p = build(e);
  if (!verify_polytope(p).is_polytope)
    throw Error(ErrorCode::InvalidPolytope, render(e) + " failed verification");
  return p;
}

std::optional<std::vector<Step>> expr_to_path(const ConstructionExpr& e) {
  using Kind = ConstructionExpr::Kind;
  auto repeat = [](std::vector<Step> path, Step s, int times) {
    path.insert(path.end(), static_cast<std::size_t>(times), s);
    return path;
  };
  switch (e.kind()) {
  case Kind::Edge:
    return std::vector<Step>{};
  case Kind::Point:
    return std::nullopt;
  case Kind::CartPow:
    if (e.base().kind() == Kind::Edge)
      return repeat({}, Step::TimesEdge, e.exponent() - 1);
    return std::nullopt;
  case Kind::JoinPow:
    return std::nullopt;
  case Kind::Join:
  case Kind::Cart:
    break;
  }
  auto prefix = expr_to_path(e.left());
  if (!prefix)
    return std::nullopt;
  const Kind atom = e.kind() == Kind::Join ? Kind::Point : Kind::Edge;
  const Kind atom_pow = e.kind() == Kind::Join ? Kind::JoinPow : Kind::CartPow;
  const Step step = e.kind() == Kind::Join ? Step::JoinPoint : Step::TimesEdge;
  const ConstructionExpr& r = e.right();
  if (r.kind() == atom)
    return repeat(std::move(*prefix), step, 1);
  if (r.kind() == atom_pow && r.base().kind() == atom)
    return repeat(std::move(*prefix), step, r.exponent());
  return std::nullopt;
}

std::optional<FamilyNode> expr_to_family(const ConstructionExpr& e, const SearchLimits& limits) {
  auto path = expr_to_path(e);
  if (!path)
    return std::nullopt;
  return node_for_path(*path, limits);
}

} // namespace polytope
