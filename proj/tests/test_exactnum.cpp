#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coneval/linalg.hpp"

using namespace coneval;

namespace {

// Small deterministic generator for property checks.
struct Lcg {
  std::uint64_t s = 12345;
  int next(int lo, int hi) {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return lo + static_cast<int>((s >> 33) % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

RatMat random_int_matrix(Lcg& g, std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Rational(Int(g.next(-5, 5)));
  return m;
}

}  // namespace

TEST_CASE("rational parse and canonical form") {
  Rational q = rat_parse("4/6");
  CHECK(rat_str(q) == "2/3");
  CHECK(rat_str(rat_parse("-10/4")) == "-5/2");
  CHECK(rat_str(rat_parse("7")) == "7");
  CHECK(rat_str(Rational(0)) == "0");
  CHECK_THROWS(rat_parse(""));
  CHECK_THROWS(rat_parse("1/0"));
  // round trip is bit-exact
  for (const char* s : {"1/2", "-3/7", "0", "12345678901234567890/7"})
    CHECK(rat_str(rat_parse(s)) == s);
}

TEST_CASE("canonical form preserved by arithmetic") {
  Rational a = rat_parse("1/6"), b = rat_parse("1/3");
  Rational c = a + b;
  CHECK(rat_str(c) == "1/2");
  CHECK(c.get_den() > 0);
  CHECK(gcd(Int(c.get_num()), Int(c.get_den())) == 1);
}

TEST_CASE("floor and ceil") {
  CHECK(rat_floor(rat_parse("-1/2")) == -1);
  CHECK(rat_ceil(rat_parse("-1/2")) == 0);
  CHECK(rat_floor(rat_parse("3")) == 3);
  CHECK(rat_ceil(rat_parse("3")) == 3);
}

TEST_CASE("primitive_vector") {
  CHECK(primitive_vector({Int(2), Int(-4), Int(6)}) == IntVec{Int(1), Int(-2), Int(3)});
  CHECK(primitive_vector({Int(1), Int(0)}) == IntVec{Int(1), Int(0)});
  CHECK(primitive_vector({Int(0), Int(-5)}) == IntVec{Int(0), Int(-1)});
  CHECK_THROWS_WITH(primitive_vector({Int(0), Int(0)}), "zero direction");
}

TEST_CASE("determinant examples") {
  CHECK(determinant(RatMat::identity(3)) == 1);
  RatMat tri(2, 2);
  tri.at(0, 0) = 1;
  tri.at(0, 1) = 1;
  tri.at(1, 1) = 2;
  CHECK(determinant(tri) == 2);
  RatMat sing(2, 2);
  sing.at(0, 0) = 1;
  sing.at(0, 1) = 1;
  sing.at(1, 0) = 2;
  sing.at(1, 1) = 2;
  CHECK(determinant(sing) == 0);
  CHECK_THROWS(determinant(RatMat(2, 3)));
}

TEST_CASE("determinant properties") {
  Lcg g;
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + trial % 3;
    RatMat a = random_int_matrix(g, n), b = random_int_matrix(g, n);
    CHECK(determinant(matmul(a, b)) == determinant(a) * determinant(b));
    // row swap flips the sign
    RatMat sw = a;
    for (std::size_t j = 0; j < n; ++j) std::swap(sw.at(0, j), sw.at(1, j));
    CHECK(determinant(sw) == -determinant(a));
  }
}

TEST_CASE("solve_exact examples") {
  RatMat m(2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  m.at(1, 1) = 2;
  auto x = solve_exact(m, {Rational(1), Rational(1)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == rat_parse("1/2"));
  CHECK((*x)[1] == rat_parse("1/2"));

  auto y = solve_exact(RatMat::identity(2), {Rational(3), Rational(4)});
  CHECK((*y) == RatVec{Rational(3), Rational(4)});

  RatMat tall(2, 1);
  tall.at(0, 0) = 1;
  tall.at(1, 0) = 1;
  CHECK(!solve_exact(tall, {Rational(1), Rational(2)}).has_value());
  CHECK(solve_exact(tall, {Rational(2), Rational(2)}).has_value());

  RatMat wide(1, 2);
  wide.at(0, 0) = 1;
  wide.at(0, 1) = 1;
  CHECK_THROWS_WITH(solve_exact(wide, {Rational(1)}).has_value(), "non-unique solution");
}

TEST_CASE("solve_exact inverts multiplication") {
  Lcg g;
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + trial % 3;
    RatMat m = random_int_matrix(g, n);
    if (determinant(m) == 0) continue;
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = Rational(g.next(-9, 9), g.next(1, 5));
      x[i].canonicalize();
    }
    RatVec b(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b[i] += m.at(i, j) * x[j];
    CHECK(*solve_exact(m, b) == x);
  }
}

TEST_CASE("nullspace and rank") {
  RatMat m(1, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  m.at(0, 2) = 1;
  CHECK(rank(m) == 1);
  auto ns = nullspace(m);
  CHECK(ns.size() == 2);
  for (const RatVec& v : ns) CHECK(v[0] + v[1] + v[2] == 0);
}
