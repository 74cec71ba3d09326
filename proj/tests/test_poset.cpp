#include <doctest.h>

#include "corpus.hpp"
#include "oracle.hpp"
#include "polytope/error.hpp"
#include "polytope/morphism.hpp"
#include "polytope/poset.hpp"
#include "polytope/products.hpp"

using namespace polytope;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::BadFormat;
}

} // namespace

TEST_CASE("from_components builds the edge and the point") {
  const auto i = PolytopePoset::from_components({{"0", -1}, {"v", 0}, {"w", 0}, {"1", 1}},
                                                {{"0", "v"}, {"0", "w"}, {"v", "1"}, {"w", "1"}});
  CHECK(i.size() == 4);
  CHECK(i.rank() == 1);
  CHECK(i.id(i.bottom()) == "0");
  CHECK(i.id(i.top()) == "1");
  CHECK(i.cover_count() == 4);

  const auto pt = PolytopePoset::from_components({{"0", -1}, {"1", 0}}, {{"0", "1"}});
  CHECK(pt.size() == 2);
  CHECK(pt.rank() == 0);
}

TEST_CASE("from_components rejects malformed input") {
  CHECK(code_of([] { PolytopePoset::from_components({{"a", -1}, {"a", 0}}, {}); }) == ErrorCode::DuplicateId);
  CHECK(code_of([] { PolytopePoset::from_components({{"0", -1}, {"1", 0}}, {{"0", "x"}}); }) ==
        ErrorCode::DanglingCover);
  CHECK(code_of([] {
          PolytopePoset::from_components({{"0", -1}, {"a", 0}, {"b", 1}}, {{"a", "b"}, {"b", "a"}});
        }) == ErrorCode::NotGraded);
  CHECK(code_of([] { PolytopePoset::from_components({{"0", -1}, {"1", 1}}, {{"0", "1"}}); }) ==
        ErrorCode::NotGraded);
  CHECK(code_of([] { PolytopePoset::from_components({{"0", -1}, {"a", 0}, {"b", 0}}, {}); }) ==
        ErrorCode::NotBounded);
  CHECK(code_of([] { PolytopePoset::from_components({{"0", -1}, {"z", -1}, {"1", 0}}, {}); }) ==
        ErrorCode::NotBounded);
}

TEST_CASE("less_eq on small posets") {
  const auto& i = edge();
  CHECK(i.less_eq("0", "1"));
  CHECK_FALSE(i.less_eq("v", "w"));
  CHECK(i.less_eq("v", "v"));
  CHECK_FALSE(point().less_eq("1", "0"));
  CHECK(code_of([&] { i.less_eq("v", "nope"); }) == ErrorCode::UnknownId);
}

TEST_CASE("less_eq agrees with breadth-first reachability") {
  for (const auto& [name, p] : corpus::small()) {
    CAPTURE(name);
    for (ElementIndex a = 0; a < p.size(); ++a)
      for (ElementIndex b = 0; b < p.size(); ++b)
        REQUIRE(p.less_eq(a, b) == oracle::reachable(p, a, b));
  }
}

TEST_CASE("section") {
  SUBCASE("full section is the poset itself") {
    const auto sq = corpus::square();
    const auto s = section(sq, sq.bottom(), sq.top());
    CHECK(s.carrier.size() == sq.size());
    CHECK(is_isomorphic(s.carrier, sq));
  }
  SUBCASE("below an edge of the square") {
    const auto sq = corpus::square();
    const ElementIndex e = sq.elements_of_rank(1).front();
    const auto s = section(sq, sq.bottom(), e).carrier;
    CHECK(s.size() == 4);
    CHECK(s.rank() == 1);
    CHECK(is_isomorphic(s, edge()));
  }
  SUBCASE("vertex figure of the cube") {
    const auto cube = corpus::cube();
    const ElementIndex v = cube.elements_of_rank(0).front();
    const auto s = section(cube, v, cube.top()).carrier;
    // v, 3 edges, 3 squares and the cube itself
    CHECK(s.size() == 8);
    CHECK(s.rank() == 2);
    CHECK(s.id(s.bottom()) == cube.id(v));
    CHECK(is_isomorphic(s, corpus::triangle()));
  }
  SUBCASE("incomparable bounds") {
    CHECK(code_of([] { section(edge(), edge().index_of("v"), edge().index_of("w")); }) ==
          ErrorCode::NotComparable);
  }
}

TEST_CASE("flags") {
  CHECK(flags(edge()).size() == 2);
  CHECK(flags(corpus::square()).size() == 8);
  const auto pt_flags = flags(point());
  REQUIRE(pt_flags.size() == 1);
  CHECK(pt_flags.front() == Flag{point().index_of("0"), point().index_of("1")});

  for (const auto& [name, p] : corpus::small()) {
    CAPTURE(name);
    const auto fl = flags(p);
    CHECK(fl.size() == flag_count(p));
    CHECK(fl.size() == oracle::all_flags(p).size());
    for (const auto& f : fl)
      CHECK(f.size() == static_cast<std::size_t>(p.rank() + 2));
    for (std::size_t i = 1; i < fl.size(); ++i) {
      std::vector<std::string> a, b;
      for (auto e : fl[i - 1]) a.push_back(p.id(e));
      for (auto e : fl[i]) b.push_back(p.id(e));
      CHECK(a < b);
    }
  }
}

TEST_CASE("is_isomorphic") {
  const auto tri_a = join(edge(), point());
  const auto tri_b = power(point(), Product::Join, 3);
  const auto m = is_isomorphic(tri_a, tri_b);
  REQUIRE(m);
  CHECK(is_order_isomorphism(tri_a, tri_b, *m));

  CHECK_FALSE(is_isomorphic(corpus::triangle(), corpus::square()));
  CHECK_FALSE(is_isomorphic(oracle::polygon(5), oracle::polygon(6)));

  const auto sq = corpus::square();
  const auto self = is_isomorphic(sq, sq);
  REQUIRE(self);
  CHECK(is_order_isomorphism(sq, sq, *self));

  SUBCASE("square built from labelled vertex sets") {
    const auto hand = PolytopePoset::from_components(
        {{"{}", -1}, {"a", 0}, {"b", 0}, {"c", 0}, {"d", 0}, {"ab", 1}, {"bc", 1}, {"cd", 1}, {"da", 1}, {"abcd", 2}},
        {{"{}", "a"}, {"{}", "b"}, {"{}", "c"}, {"{}", "d"}, {"a", "ab"}, {"b", "ab"}, {"b", "bc"}, {"c", "bc"},
         {"c", "cd"}, {"d", "cd"}, {"d", "da"}, {"a", "da"}, {"ab", "abcd"}, {"bc", "abcd"}, {"cd", "abcd"},
         {"da", "abcd"}});
    const auto fwd = is_isomorphic(hand, sq);
    REQUIRE(fwd);
    CHECK(is_order_isomorphism(hand, sq, *fwd));
    CHECK(is_isomorphic(oracle::polygon(4), hand));
  }

  SUBCASE("over the cap") {
    const auto big = power(edge(), Product::Cartesian, 4);
    CHECK(code_of([&] { is_isomorphic(big, big, SearchLimits{50}); }) == ErrorCode::SearchBudgetExceeded);
  }
}

TEST_CASE("isomorphism is an equivalence on the corpus") {
  const auto all = corpus::small();
  for (const auto& [na, a] : all)
    for (const auto& [nb, b] : all) {
      CAPTURE(na);
      CAPTURE(nb);
      const auto ab = is_isomorphic(a, b);
      const auto ba = is_isomorphic(b, a);
      REQUIRE(ab.has_value() == ba.has_value());
      REQUIRE(ab.has_value() == (na == nb));
      if (ab) {
        // ab composed with its inverse is the identity
        std::vector<ElementIndex> inv(a.size());
        for (ElementIndex x = 0; x < a.size(); ++x)
          inv[(*ab)[x]] = x;
        for (ElementIndex x = 0; x < a.size(); ++x)
          CHECK(inv[(*ab)[x]] == x);
        CHECK(flag_count(a) == flag_count(b));
      }
    }
}
