#include <doctest.h>

#include "corpus.hpp"
#include "polytope/family.hpp"
#include "polytope/morphism.hpp"

using namespace polytope;
using G = GroupDescriptor;

TEST_CASE("root is the edge") {
  const auto r = root();
  CHECK(r.run == 1);
  CHECK(r.last == Product::Cartesian);
  CHECK(r.saved == G::trivial());
  CHECK(r.path.empty());
  REQUIRE(r.polytope);
  CHECK(r.polytope->size() == 4);
  CHECK(order(aut_formula(r)) == 2);
}

TEST_CASE("children of the root") {
  const auto [sq, tri] = children(root());
  CHECK(sq.saved == G::trivial());
  CHECK(sq.run == 2);
  CHECK(sq.last == Product::Cartesian);
  CHECK(is_isomorphic(*sq.polytope, corpus::square()));

  CHECK(tri.saved == G::trivial());
  CHECK(tri.run == 3);
  CHECK(tri.last == Product::Join);
  CHECK(is_isomorphic(*tri.polytope, corpus::triangle()));
  CHECK(aut_descriptor(tri) == G::sym(3));
}

TEST_CASE("children of the triangle and the square") {
  const auto tri = child(root(), Step::JoinPoint);
  const auto [prism, tet] = children(tri);
  CHECK(prism.saved == G::sym(3));
  CHECK(prism.run == 1);
  CHECK(prism.last == Product::Cartesian);
  CHECK(tet.saved == G::trivial());
  CHECK(tet.run == 4);
  CHECK(tet.last == Product::Join);
  CHECK(aut_descriptor(tet) == G::sym(4));
  CHECK(order(aut_descriptor(tet)) == 24);

  const auto sq = child(root(), Step::TimesEdge);
  CHECK(aut_descriptor(sq) == G::hyp(2));
  CHECK(order(aut_descriptor(sq)) == 8);
  const auto pyr = child(sq, Step::JoinPoint);
  CHECK(pyr.saved == G::hyp(2));
  CHECK(pyr.run == 1);
  CHECK(pyr.last == Product::Join);
}

TEST_CASE("the six-step example") {
  const std::vector<Step> path{Step::JoinPoint, Step::TimesEdge, Step::TimesEdge,
                               Step::TimesEdge, Step::JoinPoint, Step::JoinPoint};
  const auto node = node_for_path(path);
  CHECK(node.element_count == 760);
  REQUIRE(node.polytope);
  CHECK(aut_descriptor(node) == normalize(G::product({G::sym(3), G::hyp(3), G::sym(2)})));
  CHECK(render(aut_formula(node)) == "(Sym(3) × ((Z/2Z)^3 ⋊ Sym(3))) × Sym(2)");
  CHECK(order(aut_formula(node)) == 576);

  const auto [prism, pyramid] = children(node);
  CHECK_FALSE(prism.polytope); // 2278 faces, above the default cap
  CHECK(prism.element_count == 2278);
  CHECK(render(aut_formula(prism)) == "((Sym(3) × ((Z/2Z)^3 ⋊ Sym(3))) × Sym(2)) × Z/2Z");
  CHECK(order(aut_formula(prism)) == 1152);
  CHECK(render(aut_formula(pyramid)) == "(Sym(3) × ((Z/2Z)^3 ⋊ Sym(3))) × Sym(3)");
  CHECK(order(aut_formula(pyramid)) == 1728);
}

TEST_CASE("enumerate") {
  const auto zero = enumerate(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].path.empty());

  const auto one = enumerate(1);
  REQUIRE(one.size() == 2);
  CHECK(is_isomorphic(*one[0].polytope, corpus::square()));
  CHECK(is_isomorphic(*one[1].polytope, corpus::triangle()));

  const auto two = enumerate(2);
  REQUIRE(two.size() == 4);
  CHECK(is_isomorphic(*two[0].polytope, corpus::cube()));
  CHECK(is_isomorphic(*two[1].polytope, corpus::square_pyramid()));
  CHECK(is_isomorphic(*two[2].polytope, corpus::triangular_prism()));
  CHECK(is_isomorphic(*two[3].polytope, corpus::tetrahedron()));

  const auto three = enumerate(3);
  REQUIRE(three.size() == 8);
  // Orders from flag propagation and vertex-permutation counting in oracle.hpp.
  const std::vector<unsigned> orders{384, 48, 16, 16, 48, 12, 48, 120};
  const std::vector<std::size_t> sizes{82, 56, 58, 40, 64, 44, 46, 32};
  for (std::size_t i = 0; i < 8; ++i) {
    CAPTURE(render_path(three[i].path));
    CHECK(order(aut_descriptor(three[i])) == orders[i]);
    CHECK(three[i].polytope->size() == sizes[i]);
    CHECK(three[i].element_count == sizes[i]);
    CHECK(three[i].rank() == three[i].polytope->rank());
  }
}

TEST_CASE("elided nodes keep their state") {
  const auto nodes = enumerate(3, SearchLimits{50});
  CHECK_FALSE(nodes[0].polytope); // I^x4, 82 faces
  CHECK(nodes[7].polytope);       // pt^*5, 32 faces
  CHECK(order(aut_descriptor(nodes[0])) == 384);
  const auto deep = enumerate(12, SearchLimits{10});
  CHECK(deep.size() == 4096);
  CHECK(order(aut_descriptor(deep.back())) == order(G::sym(14))); // I * pt^{*12} = pt^{*14}
}

TEST_CASE("run length follows the last block of equal steps") {
  for (unsigned s = 0; s <= 6; ++s)
    for (const auto& node : enumerate(s, SearchLimits{0})) {
      CAPTURE(render_path(node.path));
      const auto& path = node.path;
      const Step last = path.empty() ? Step::TimesEdge : path.back();
      std::size_t tail = 0;
      while (tail < path.size() && path[path.size() - 1 - tail] == last)
        ++tail;
      // A block reaching back to the root also counts I itself (I = pt * pt on the join side).
      unsigned expected = static_cast<unsigned>(tail);
      if (tail == path.size())
        expected += last == Step::TimesEdge ? 1 : 2;
      CHECK(node.run == expected);
      CHECK(node.last == (last == Step::TimesEdge ? Product::Cartesian : Product::Join));
    }
}

TEST_CASE("json") {
  const auto node = child(child(root(), Step::JoinPoint), Step::TimesEdge);
  const auto j = to_json(node);
  CHECK(j["path"] == nlohmann::json::array({"*pt", "xI"}));
  CHECK(j["k"] == 1);
  CHECK(j["prod"] == "cartesian");
  CHECK(j["A"] == to_json(G::sym(3)));
  CHECK(j["order"] == 12);
}
