#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "coneval/polytope.hpp"

using namespace coneval;

namespace {

RatVec rv(std::initializer_list<const char*> coords) {
  RatVec v;
  for (const char* c : coords) v.push_back(rat_parse(c));
  return v;
}

Polytope unit_square() {
  return Polytope::from_vertices(
      2, {rv({"0", "0"}), rv({"1", "0"}), rv({"1", "1"}), rv({"0", "1"})});
}

bool has_facet(const std::vector<Halfspace>& hs, std::initializer_list<long> normal,
               const char* offset) {
  IntVec n;
  for (long x : normal) n.push_back(Int(x));
  Rational b = rat_parse(offset);
  return std::any_of(hs.begin(), hs.end(),
                     [&](const Halfspace& h) { return h.normal == n && h.offset == b; });
}

}  // namespace

TEST_CASE("facet enumeration: unit square") {
  auto hs = unit_square().facets();
  CHECK(hs.size() == 4);
  CHECK(has_facet(hs, {-1, 0}, "0"));
  CHECK(has_facet(hs, {0, -1}, "0"));
  CHECK(has_facet(hs, {1, 0}, "1"));
  CHECK(has_facet(hs, {0, 1}, "1"));
}

TEST_CASE("facet enumeration: standard 2-simplex") {
  Polytope p = Polytope::from_vertices(2, {rv({"0", "0"}), rv({"1", "0"}), rv({"0", "1"})});
  auto hs = p.facets();
  CHECK(hs.size() == 3);
  CHECK(has_facet(hs, {-1, 0}, "0"));
  CHECK(has_facet(hs, {0, -1}, "0"));
  CHECK(has_facet(hs, {1, 1}, "1"));
}

TEST_CASE("facet enumeration: rational segment") {
  Polytope p = Polytope::from_vertices(1, {rv({"0"}), rv({"1/2"})});
  auto hs = p.facets();
  CHECK(hs.size() == 2);
  CHECK(has_facet(hs, {-1}, "0"));
  CHECK(has_facet(hs, {2}, "1"));
}

TEST_CASE("vertex validation") {
  // midpoint of an edge is not extreme
  CHECK_THROWS(Polytope::from_vertices(
      2, {rv({"0", "0"}), rv({"1", "0"}), rv({"1", "1"}), rv({"0", "1"}), rv({"1/2", "0"})}));
  CHECK_THROWS(Polytope::from_vertices(2, {rv({"0", "0"}), rv({"1", "0"}), rv({"0", "0"})}));
  // lower-dimensional vertex set
  CHECK_THROWS_WITH(Polytope::from_vertices(2, {rv({"0", "0"}), rv({"1", "1"})}),
                    "not full-dimensional");
}

TEST_CASE("tangent cones of the square") {
  Polytope p = unit_square();

  TangentCone corner = tangent_cone(p, rv({"0", "0"}), Openness::closed);
  REQUIRE(corner.kind == TangentCone::Kind::proper);
  CHECK(corner.constraints.size() == 2);
  for (const auto& c : corner.constraints) CHECK(!c.strict);

  CHECK(tangent_cone(p, rv({"1/2", "1/2"}), Openness::closed).kind ==
        TangentCone::Kind::ambient);
  CHECK(tangent_cone(p, rv({"2", "0"}), Openness::closed).kind == TangentCone::Kind::empty);

  TangentCone open_corner = tangent_cone(p, rv({"0", "0"}), Openness::relatively_open);
  for (const auto& c : open_corner.constraints) CHECK(c.strict);
}

TEST_CASE("tangent cone matches open membership") {
  Polytope p = unit_square();
  for (const char* x : {"0", "1/3", "1/2", "1", "3/2"})
    for (const char* y : {"0", "1/4", "1", "2"}) {
      RatVec m = rv({x, y});
      bool interior = membership(p.facets(), m, Openness::relatively_open);
      CHECK((tangent_cone(p, m, Openness::closed).kind == TangentCone::Kind::ambient) ==
            interior);
    }
}

TEST_CASE("polytope denominator") {
  CHECK(polytope_denominator(Polytope::from_vertices(
            2, {rv({"0", "0"}), rv({"1/2", "0"}), rv({"0", "1/3"})})) == 6);
  CHECK(polytope_denominator(unit_square()) == 1);
  CHECK(polytope_denominator(Polytope::from_vertices(1, {rv({"0"}), rv({"1/2"})})) == 2);
}

TEST_CASE("scale and negate") {
  Polytope p = unit_square();
  Polytope p2 = scale_and_negate(p, Int(2));
  CHECK(std::count(p2.vertices().begin(), p2.vertices().end(), rv({"2", "2"})) == 1);
  Polytope pm = scale_and_negate(p, Int(-1));
  CHECK(std::count(pm.vertices().begin(), pm.vertices().end(), rv({"-1", "-1"})) == 1);
  Polytope seg = scale_and_negate(Polytope::from_vertices(1, {rv({"0"}), rv({"1/2"})}), Int(3));
  CHECK(std::count(seg.vertices().begin(), seg.vertices().end(), rv({"3/2"})) == 1);
  CHECK_THROWS_WITH(scale_and_negate(p, Int(0)), "degenerate dilate");
  // denominator of an integer dilate divides the original denominator
  Polytope rat = Polytope::from_vertices(2, {rv({"0", "0"}), rv({"1/2", "0"}), rv({"0", "1/3"})});
  Int d0 = polytope_denominator(rat);
  for (long t : {2, 3, 6, -2})
    CHECK(d0 % polytope_denominator(scale_and_negate(rat, Int(t))) == 0);
}

TEST_CASE("membership") {
  Polytope p = unit_square();
  CHECK(membership(p.facets(), rv({"0", "0"}), Openness::closed));
  CHECK(!membership(p.facets(), rv({"0", "0"}), Openness::relatively_open));
  CHECK(membership(p.facets(), rv({"1/2", "1/2"}), Openness::relatively_open));
}

TEST_CASE("facet round trip") {
  for (Polytope p :
       {unit_square(),
        Polytope::from_vertices(3, {rv({"0", "0", "0"}), rv({"1", "0", "0"}),
                                    rv({"0", "1", "0"}), rv({"1", "1", "2"})})}) {
    for (const RatVec& v : p.vertices()) {
      CHECK(membership(p.facets(), v, Openness::closed));
      int tight = 0;
      for (const Halfspace& h : p.facets())
        if (dot(h.normal, v) == h.offset) ++tight;
      CHECK(tight >= p.dim());
    }
  }
}

TEST_CASE("json round trip") {
  Polytope p = Polytope::from_vertices(2, {rv({"0", "0"}), rv({"1/2", "0"}), rv({"0", "1/3"})});
  Polytope q = Polytope::from_json(p.to_json());
  CHECK(q.dim() == 2);
  CHECK(q.vertices() == p.vertices());
  CHECK(q.to_json() == p.to_json());
}
