#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coneval/polytope.hpp"

namespace coneval {

// Exact rational or approximate real with an absolute error bound. Exact
// values never silently degrade; mixing with an approximate value yields an
// approximate result with a propagated bound.
class Value {
 public:
  Value() : exact_(true), q_(0) {}
  Value(const Rational& q) : exact_(true), q_(q) {}
  Value(long long n) : exact_(true), q_(Rational(Int(static_cast<long>(n)))) {}
  static Value approx(double a, double err) {
    Value v;
    v.exact_ = false;
    v.q_ = 0;
    v.a_ = a;
    v.err_ = err;
    return v;
  }

  bool exact() const { return exact_; }
  const Rational& rat() const;
  double num() const { return exact_ ? q_.get_d() : a_; }
  double err() const { return exact_ ? 0.0 : err_; }
  bool is_exact_zero() const { return exact_ && q_ == 0; }

  Value operator-() const;
  Value operator+(const Value& o) const;
  Value operator-(const Value& o) const { return *this + (-o); }
  Value operator*(const Value& o) const;
  Value& operator+=(const Value& o) { return *this = *this + o; }
  Value& operator*=(const Value& o) { return *this = *this * o; }

  // "p/q" for exact values, "approx:<decimal>" otherwise.
  std::string str() const;

 private:
  bool exact_;
  Rational q_;
  double a_ = 0.0;
  double err_ = 0.0;
};

struct SolidAngleConfig {
  std::uint64_t mc_samples = 200000;
  std::uint64_t rng_seed = 0;
  int exact_dim_cap = 3;
};

struct ValuationKind {
  enum class Kind { ehrhart, direction, solid_angle };
  Kind kind = Kind::ehrhart;
  RatVec dir;  // direction valuation only; must be nonzero
  SolidAngleConfig cfg;

  static ValuationKind ehrhart() { return {Kind::ehrhart, {}, {}}; }
  static ValuationKind direction(RatVec v) { return {Kind::direction, std::move(v), {}}; }
  static ValuationKind solid_angle(SolidAngleConfig c = {}) {
    return {Kind::solid_angle, {}, c};
  }
};

// 1 if the origin lies in the cone (it fails only strict constraints).
Value ehrhart_value(const TangentCone& k);

// 1 if a small step in direction v stays in the cone.
Value direction_value(const TangentCone& k, const RatVec& v);

// Fraction of a small ball at the apex covered by the cone. Strict flags are
// ignored (the boundary has measure zero). Closed forms up to effective
// dimension min(3, cfg.exact_dim_cap); seeded Monte Carlo beyond that.
Value solid_angle_value(const TangentCone& k, const SolidAngleConfig& cfg, int ambient_dim);

// Lineality decomposition of a proper cone: dimension of the lineality space
// and the constraint normals projected into orthonormal coordinates of its
// complement (the pointed part lives there).
struct EffectiveCone {
  int lineality_dim = 0;
  int effective_dim = 0;
  std::vector<std::vector<double>> projected_normals;
};
EffectiveCone cone_effective_form(const TangentCone& k, int ambient_dim);

Value valuation_value(const TangentCone& k, const ValuationKind& val, int ambient_dim);

}  // namespace coneval
