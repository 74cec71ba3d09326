#include "polytope/autom.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

#include "polytope/error.hpp"
#include "polytope/morphism.hpp"
#include "polytope/products.hpp"

namespace polytope {

FacePermutation FacePermutation::identity(std::size_t n) {
  FacePermutation p;
  p.image.resize(n);
  std::iota(p.image.begin(), p.image.end(), ElementIndex{0});
  return p;
}

FacePermutation compose(const FacePermutation& a, const FacePermutation& b) {
  FacePermutation out;
  out.image.resize(b.degree());
  for (std::size_t x = 0; x < b.degree(); ++x)
    out.image[x] = a.image[b.image[x]];
  return out;
}

FacePermutation inverse(const FacePermutation& p) {
  FacePermutation out;
  out.image.resize(p.degree());
  for (std::size_t x = 0; x < p.degree(); ++x)
    out.image[p.image[x]] = static_cast<ElementIndex>(x);
  return out;
}

bool is_automorphism(const PolytopePoset& p, const FacePermutation& f) {
  return is_order_isomorphism(p, p, f.image);
}

std::vector<FacePermutation> automorphisms(const PolytopePoset& p, const SearchLimits& limits) {
  std::vector<FacePermutation> out;
  for_each_isomorphism(
      p, p,
      [&](std::span<const ElementIndex> m) {
        out.push_back(FacePermutation{{m.begin(), m.end()}});
        return true;
      },
      limits);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t aut_order(const PolytopePoset& p, const SearchLimits& limits) {
  return for_each_isomorphism(p, p, [](std::span<const ElementIndex>) { return true; }, limits);
}

namespace {

const Origin& origin_of(const PolytopePoset& p, ElementIndex e) {
  const auto& o = p.origin(e);
  if (!o)
    throw Error(ErrorCode::MissingProvenance, "element '" + p.id(e) + "' has no product origin");
  return *o;
}

// Builds a permutation of `poly` from a rule on the (left, right) origin of each face.
template <typename Rule>
FacePermutation by_origin(const PolytopePoset& poly, bool fix_bottom, Rule rule) {
  FacePermutation f;
  f.image.resize(poly.size());
  for (ElementIndex e = 0; e < poly.size(); ++e) {
    if (fix_bottom && e == poly.bottom()) {
      f.image[e] = e;
      continue;
    }
    const Origin& o = origin_of(poly, e);
    f.image[e] = poly.index_of(rule(o.left, o.right));
  }
  return f;
}

FacePermutation lift(const PolytopePoset& parent, const PolytopePoset& child, const FacePermutation& g,
                     bool cartesian_step) {
  return by_origin(child, cartesian_step, [&](const std::string& left, const std::string& right) {
    return pair_id(parent.id(g(parent.index_of(left))), right);
  });
}

std::string swap_edge_vertices(const std::string& x) {
  if (x == "v")
    return "w";
  if (x == "w")
    return "v";
  return x;
}

// I read as pt * pt: 0 = (0|0), v = (1|0), w = (0|1), 1 = (1|1).
std::pair<std::string, std::string> edge_as_join(const std::string& x) {
  if (x == "0")
    return {"0", "0"};
  if (x == "v")
    return {"1", "0"};
  if (x == "w")
    return {"0", "1"};
  return {"1", "1"};
}

std::string edge_from_join(const std::string& a, const std::string& b) {
  if (a == "0")
    return b == "0" ? "0" : "w";
  return b == "0" ? "v" : "1";
}

struct Replay {
  PolytopePoset poly;
  std::vector<FacePermutation> gens;
  Product last;
  bool at_root;
};

Replay advance(const Replay& cur, Step step) {
  const bool prism = step == Step::TimesEdge;
  PolytopePoset next = prism ? cartesian(cur.poly, edge()) : join(cur.poly, point());

  std::vector<FacePermutation> gens;
  for (const auto& g : cur.gens)
    gens.push_back(lift(cur.poly, next, g, prism));

  const PolytopePoset& parent = cur.poly;
  if (prism && cur.last == Product::Cartesian) {
    // Swap the last two I coordinates.
    gens.push_back(by_origin(next, true, [&](const std::string& left, const std::string& right) {
      if (cur.at_root)
        return pair_id(right, left);
      const Origin& inner = origin_of(parent, parent.index_of(left));
      return pair_id(pair_id(inner.left, right), inner.right);
    }));
  } else if (prism) {
    // Exchange the two copies of the pyramid.
    gens.push_back(by_origin(next, true, [](const std::string& left, const std::string& right) {
      return pair_id(left, swap_edge_vertices(right));
    }));
  } else if (cur.at_root) {
    // Transpose the second cone point of I = pt * pt with the new one.
    gens.push_back(by_origin(next, false, [](const std::string& left, const std::string& right) {
      const auto [first, second] = edge_as_join(left);
      return pair_id(edge_from_join(first, right), second);
    }));
  } else if (cur.last == Product::Join) {
    // Transpose the last two cone points.
    gens.push_back(by_origin(next, false, [&](const std::string& left, const std::string& right) {
      const Origin& inner = origin_of(parent, parent.index_of(left));
      return pair_id(pair_id(inner.left, right), inner.right);
    }));
  }
  return Replay{std::move(next), std::move(gens), prism ? Product::Cartesian : Product::Join, false};
}

} // namespace

std::vector<FacePermutation> described_generators(const FamilyNode& node) {
  if (!node.polytope)
    throw Error(ErrorCode::MissingProvenance, "face lattice of " + render_path(node.path) + " not materialized");
  const PolytopePoset& i = edge();
  FacePermutation swap = FacePermutation::identity(i.size());
  std::swap(swap.image[i.index_of("v")], swap.image[i.index_of("w")]);

  Replay cur{i, {swap}, Product::Cartesian, true};
  for (Step s : node.path)
    cur = advance(cur, s);
  if (cur.poly.ids() != node.polytope->ids())
    throw Error(ErrorCode::MissingProvenance, "node lattice does not match its construction history");
  return std::move(cur.gens);
}

namespace {

struct ImageHash {
  std::size_t operator()(const std::vector<ElementIndex>& v) const noexcept {
    return boost::hash_range(v.begin(), v.end());
  }
};

} // namespace

std::uint64_t closure(const std::vector<FacePermutation>& generators, std::size_t degree, std::size_t max_size) {
  std::unordered_set<std::vector<ElementIndex>, ImageHash> seen;
  std::deque<std::vector<ElementIndex>> frontier;
  auto id = FacePermutation::identity(degree).image;
  seen.insert(id);
  frontier.push_back(std::move(id));
  while (!frontier.empty()) {
    FacePermutation g{std::move(frontier.front())};
    frontier.pop_front();
    for (const auto& s : generators) {
      if (s.degree() != degree)
        throw Error(ErrorCode::BadFormat, "generator degree differs from the poset size");
      auto h = compose(s, g).image;
      if (seen.insert(h).second) {
        if (seen.size() > max_size)
          throw Error(ErrorCode::ClosureBudgetExceeded, "group has more than " + std::to_string(max_size) + " elements");
        frontier.push_back(std::move(h));
      }
    }
  }
  return seen.size();
}

nlohmann::json to_json(const PolytopePoset& p, const FacePermutation& f) {
  nlohmann::json out = nlohmann::json::object();
  for (ElementIndex e = 0; e < f.degree(); ++e)
    out[p.id(e)] = p.id(f(e));
  return out;
}

} // namespace polytope
