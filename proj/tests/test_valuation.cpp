#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "coneval/valuation.hpp"

using namespace coneval;

namespace {

RatVec rv(std::initializer_list<const char*> coords) {
  RatVec v;
  for (const char* c : coords) v.push_back(rat_parse(c));
  return v;
}

IntVec iv(std::initializer_list<long> coords) {
  IntVec v;
  for (long c : coords) v.push_back(Int(c));
  return v;
}

TangentCone cone(std::vector<std::pair<IntVec, bool>> cs) {
  std::vector<TangentCone::Constraint> constraints;
  for (auto& [n, strict] : cs) constraints.push_back({std::move(n), strict});
  return TangentCone::proper(std::move(constraints));
}

void check_value(const Value& v, double expected, double tol) {
  CHECK(std::abs(v.num() - expected) <= tol + v.err());
}

}  // namespace

TEST_CASE("value arithmetic and formatting") {
  Value a(rat_parse("1/2")), b(rat_parse("1/3"));
  CHECK((a + b).str() == "5/6");
  CHECK((a * b).str() == "1/6");
  CHECK((a - a).is_exact_zero());
  CHECK(Value(3).str() == "3");

  Value x = Value::approx(0.5, 1e-9);
  CHECK(!x.exact());
  Value y = a + x;
  CHECK(!y.exact());
  CHECK(y.num() == doctest::Approx(1.0));
  CHECK(y.err() >= 1e-9);
  CHECK(y.str().rfind("approx:", 0) == 0);
  // error bounds grow under multiplication
  Value z = x * Value::approx(2.0, 1e-9);
  CHECK(z.err() >= 2e-9);
}

TEST_CASE("indicator of the origin") {
  CHECK(ehrhart_value(TangentCone::make_ambient()).str() == "1");
  CHECK(ehrhart_value(TangentCone::make_empty()).is_exact_zero());
  CHECK(ehrhart_value(cone({{iv({-1, 0}), false}, {iv({0, -1}), false}})).str() == "1");
  CHECK(ehrhart_value(cone({{iv({-1, 0}), true}, {iv({0, -1}), false}})).is_exact_zero());
}

TEST_CASE("direction valuation") {
  TangentCone quadrant = cone({{iv({-1, 0}), false}, {iv({0, -1}), false}});
  CHECK(direction_value(quadrant, rv({"1", "1"})).str() == "1");
  CHECK(direction_value(quadrant, rv({"-1", "0"})).is_exact_zero());
  CHECK(direction_value(quadrant, rv({"0", "1"})).str() == "1");  // boundary admitted
  TangentCone strict_quadrant = cone({{iv({-1, 0}), true}, {iv({0, -1}), false}});
  CHECK(direction_value(strict_quadrant, rv({"0", "1"})).is_exact_zero());
  CHECK(direction_value(strict_quadrant, rv({"1", "0"})).str() == "1");
  CHECK(direction_value(TangentCone::make_ambient(), rv({"5", "0"})).str() == "1");
  CHECK(direction_value(TangentCone::make_empty(), rv({"1", "0"})).is_exact_zero());
  CHECK_THROWS_WITH(direction_value(quadrant, rv({"0", "0"})), "zero direction");
}

TEST_CASE("solid angle closed forms") {
  SolidAngleConfig cfg;
  CHECK(solid_angle_value(TangentCone::make_ambient(), cfg, 2).str() == "1");
  CHECK(solid_angle_value(TangentCone::make_empty(), cfg, 2).is_exact_zero());

  // quarter plane
  Value quarter = solid_angle_value(cone({{iv({-1, 0}), false}, {iv({0, -1}), false}}), cfg, 2);
  check_value(quarter, 0.25, 1e-12);

  // octant
  Value octant = solid_angle_value(
      cone({{iv({-1, 0, 0}), false}, {iv({0, -1, 0}), false}, {iv({0, 0, -1}), false}}), cfg, 3);
  check_value(octant, 0.125, 1e-12);

  // wedge with lineality along z reduces to a planar quadrant
  Value wedge =
      solid_angle_value(cone({{iv({-1, 0, 0}), false}, {iv({0, -1, 0}), false}}), cfg, 3);
  check_value(wedge, 0.25, 1e-12);

  // halfspaces are exactly 1/2 regardless of ambient dimension
  CHECK(solid_angle_value(cone({{iv({1, 0, 0}), false}}), cfg, 3).str() == "1/2");
  CHECK(solid_angle_value(cone({{iv({0, 1}), false}}), cfg, 2).str() == "1/2");

  // 120-degree planar cone: normals (0,-1) and (sin60-cone) picked rationally:
  // cone spanned by (1,0) and (-1,2) has angle atan2(2,-1)
  Value planar = solid_angle_value(cone({{iv({0, -1}), false}, {iv({-2, -1}), false}}), cfg, 2);
  check_value(planar, std::atan2(2.0, -1.0) / (2 * std::acos(-1.0)), 1e-12);
}

TEST_CASE("solid angle fan of quadrants partitions the plane") {
  SolidAngleConfig cfg;
  Value total(0);
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      total += solid_angle_value(cone({{iv({sx, 0}), false}, {iv({0, sy}), false}}), cfg, 2);
  CHECK(total.num() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("solid angle additivity on adjacent quadrants") {
  SolidAngleConfig cfg;
  // right and upper quadrants overlap in the ray x=0,y>=0 (angle 0) and union
  // to the halfplane y >= 0 (angle 1/2)
  Value right = solid_angle_value(cone({{iv({-1, 0}), false}, {iv({0, -1}), false}}), cfg, 2);
  Value upper = solid_angle_value(cone({{iv({1, 0}), false}, {iv({0, -1}), false}}), cfg, 2);
  Value half = solid_angle_value(cone({{iv({0, -1}), false}}), cfg, 2);
  CHECK(std::abs((right + upper - half).num()) < 1e-10);
}

TEST_CASE("solid angle Monte Carlo fallback") {
  SolidAngleConfig cfg;
  cfg.exact_dim_cap = 1;  // force MC for the planar quadrant
  cfg.mc_samples = 100000;
  Value mc = solid_angle_value(cone({{iv({-1, 0}), false}, {iv({0, -1}), false}}), cfg, 2);
  CHECK(!mc.exact());
  CHECK(std::abs(mc.num() - 0.25) <= mc.err());
  CHECK(mc.err() < 0.01);

  // deterministic for a fixed seed, different streams for different seeds
  Value again = solid_angle_value(cone({{iv({-1, 0}), false}, {iv({0, -1}), false}}), cfg, 2);
  CHECK(mc.num() == again.num());
  cfg.rng_seed = 1;
  Value other = solid_angle_value(cone({{iv({-1, 0}), false}, {iv({0, -1}), false}}), cfg, 2);
  CHECK(mc.num() != other.num());

  // 4-D orthant
  cfg = SolidAngleConfig{};
  cfg.mc_samples = 100000;
  Value orthant4 = solid_angle_value(cone({{iv({-1, 0, 0, 0}), false},
                                           {iv({0, -1, 0, 0}), false},
                                           {iv({0, 0, -1, 0}), false},
                                           {iv({0, 0, 0, -1}), false}}),
                                     cfg, 4);
  CHECK(!orthant4.exact());
  CHECK(std::abs(orthant4.num() - 0.0625) <= orthant4.err());
}

TEST_CASE("cone effective form") {
  EffectiveCone wedge =
      cone_effective_form(cone({{iv({-1, 0, 0}), false}, {iv({0, -1, 0}), false}}), 3);
  CHECK(wedge.lineality_dim == 1);
  CHECK(wedge.effective_dim == 2);
  CHECK(wedge.projected_normals.size() == 2);

  EffectiveCone pointed =
      cone_effective_form(cone({{iv({-1, 0}), false}, {iv({0, -1}), false}}), 2);
  CHECK(pointed.lineality_dim == 0);
  CHECK(pointed.effective_dim == 2);

  EffectiveCone halfspace = cone_effective_form(cone({{iv({0, 0, 1}), false}}), 3);
  CHECK(halfspace.lineality_dim == 2);
  CHECK(halfspace.effective_dim == 1);
}

TEST_CASE("values of proper cones stay in the unit interval") {
  SolidAngleConfig cfg;
  std::vector<TangentCone> cones = {
      cone({{iv({-1, 0}), false}, {iv({0, -1}), false}}),
      cone({{iv({1, 2}), false}, {iv({3, -1}), false}}),
      cone({{iv({-1, 0, 0}), false}, {iv({0, -1, 0}), false}, {iv({0, 0, -1}), true}}),
  };
  for (const auto& k : cones) {
    int d = static_cast<int>(k.constraints[0].normal.size());
    RatVec ones(d, Rational(1));
    for (const Value& v :
         {ehrhart_value(k), direction_value(k, ones), solid_angle_value(k, cfg, d)}) {
      CHECK(v.num() >= -1e-12);
      CHECK(v.num() <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("valuation dispatcher") {
  TangentCone quadrant = cone({{iv({-1, 0}), false}, {iv({0, -1}), false}});
  CHECK(valuation_value(quadrant, ValuationKind::ehrhart(), 2).str() == "1");
  CHECK(valuation_value(quadrant, ValuationKind::direction(rv({"-1", "-1"})), 2)
            .is_exact_zero());
  check_value(valuation_value(quadrant, ValuationKind::solid_angle(), 2), 0.25, 1e-12);
}
