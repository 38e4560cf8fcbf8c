#include "coneval/valuation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

namespace coneval {

const Rational& Value::rat() const {
  if (!exact_) throw std::logic_error("approximate value has no exact form");
  return q_;
}

Value Value::operator-() const {
  if (exact_) return Value(Rational(-q_));
  return approx(-a_, err_);
}

Value Value::operator+(const Value& o) const {
  if (exact_ && o.exact_) return Value(Rational(q_ + o.q_));
  return approx(num() + o.num(), err() + o.err());
}

Value Value::operator*(const Value& o) const {
  if (exact_ && o.exact_) return Value(Rational(q_ * o.q_));
  double x = num(), y = o.num();
  return approx(x * y, std::abs(x) * o.err() + std::abs(y) * err() + err() * o.err());
}

std::string Value::str() const {
  if (exact_) return rat_str(q_);
  char buf[64];
  std::snprintf(buf, sizeof buf, "approx:%.17g", a_);
  return buf;
}

Value ehrhart_value(const TangentCone& k) {
  switch (k.kind) {
    case TangentCone::Kind::empty:
      return Value(0);
    case TangentCone::Kind::ambient:
      return Value(1);
    case TangentCone::Kind::proper:
      for (const auto& c : k.constraints)
        if (c.strict) return Value(0);  // 0 < 0 fails at the origin
      return Value(1);
  }
  return Value(0);
}

Value direction_value(const TangentCone& k, const RatVec& v) {
  bool all_zero = true;
  for (const Rational& x : v)
    if (x != 0) all_zero = false;
  if (v.empty() || all_zero) throw std::invalid_argument("zero direction");
  switch (k.kind) {
    case TangentCone::Kind::empty:
      return Value(0);
    case TangentCone::Kind::ambient:
      return Value(1);
    case TangentCone::Kind::proper:
      for (const auto& c : k.constraints) {
        int s = sgn(dot(c.normal, v));
        if (s > 0 || (s == 0 && c.strict)) return Value(0);
      }
      return Value(1);
  }
  return Value(0);
}

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<std::vector<double>> normals_as_double(const TangentCone& k) {
  std::vector<std::vector<double>> ns;
  for (const auto& c : k.constraints) {
    std::vector<double> n;
    for (const Int& x : c.normal) n.push_back(x.get_d());
    ns.push_back(std::move(n));
  }
  return ns;
}

double ddot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Deterministic standard normal deviates (Box-Muller over raw engine bits;
// std::normal_distribution is not pinned across standard libraries).
class GaussStream {
 public:
  explicit GaussStream(std::uint64_t seed) : eng_(seed) {}
  double next() {
    if (have_) {
      have_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * kPi * u2);
    have_ = true;
    return r * std::cos(2.0 * kPi * u2);
  }

 private:
  double uniform() { return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1p-53; }
  std::mt19937_64 eng_;
  bool have_ = false;
  double spare_ = 0;
};

// Planar cone angle from 2-d normals: extreme rays lie on constraint
// boundaries, and the angle is the widest separation among feasible rays.
double planar_angle(const std::vector<std::vector<double>>& ns) {
  std::vector<std::vector<double>> rays;
  for (const auto& n : ns) {
    double len = std::sqrt(ddot(n, n));
    for (int sign : {1, -1}) {
      std::vector<double> r{sign * n[1] / len, -sign * n[0] / len};
      bool ok = true;
      for (const auto& m : ns)
        if (ddot(m, r) > 1e-9 * std::sqrt(ddot(m, m))) {
          ok = false;
          break;
        }
      if (ok) rays.push_back(r);
    }
  }
  double theta = 0;
  for (std::size_t i = 0; i < rays.size(); ++i)
    for (std::size_t j = i + 1; j < rays.size(); ++j) {
      double c = ddot(rays[i], rays[j]);
      double s = rays[i][0] * rays[j][1] - rays[i][1] * rays[j][0];
      theta = std::max(theta, std::atan2(std::abs(s), c));
    }
  return theta / (2 * kPi);
}

// Spherical polygon area of a pointed 3-d cone via a fan of spherical
// triangles (Van Oosterom-Strackee excess), divided by 4*pi.
double spherical_fraction(const std::vector<std::vector<double>>& ns) {
  auto cross = [](const std::vector<double>& a, const std::vector<double>& b) {
    return std::vector<double>{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                               a[0] * b[1] - a[1] * b[0]};
  };
  std::vector<std::vector<double>> rays;
  for (std::size_t i = 0; i < ns.size(); ++i)
    for (std::size_t j = i + 1; j < ns.size(); ++j) {
      std::vector<double> c = cross(ns[i], ns[j]);
      double len = std::sqrt(ddot(c, c));
      if (len < 1e-12) continue;
      for (int sign : {1, -1}) {
        std::vector<double> r{sign * c[0] / len, sign * c[1] / len, sign * c[2] / len};
        bool ok = true;
        for (const auto& m : ns)
          if (ddot(m, r) > 1e-9 * std::sqrt(ddot(m, m))) {
            ok = false;
            break;
          }
        if (!ok) continue;
        bool dup = false;
        for (const auto& q : rays)
          if (ddot(q, r) > 1.0 - 1e-9) dup = true;
        if (!dup) rays.push_back(r);
      }
    }
  if (rays.size() < 3) return 0.0;

  std::vector<double> centroid(3, 0.0);
  for (const auto& r : rays)
    for (int i = 0; i < 3; ++i) centroid[i] += r[i];
  double clen = std::sqrt(ddot(centroid, centroid));
  if (clen < 1e-12) return 0.0;
  for (double& x : centroid) x /= clen;
  // Orthonormal frame perpendicular to the centroid, for angular sorting.
  std::vector<double> ref = std::abs(centroid[0]) < 0.9 ? std::vector<double>{1, 0, 0}
                                                        : std::vector<double>{0, 1, 0};
  std::vector<double> u = cross(centroid, ref);
  double ulen = std::sqrt(ddot(u, u));
  for (double& x : u) x /= ulen;
  std::vector<double> w = cross(centroid, u);
  std::sort(rays.begin(), rays.end(), [&](const auto& a, const auto& b) {
    return std::atan2(ddot(a, w), ddot(a, u)) < std::atan2(ddot(b, w), ddot(b, u));
  });

  double excess = 0;
  for (std::size_t i = 1; i + 1 < rays.size(); ++i) {
    const auto &a = rays[0], &b = rays[i], &c = rays[i + 1];
    double triple = ddot(a, cross(b, c));
    double denom = 1.0 + ddot(a, b) + ddot(b, c) + ddot(c, a);
    excess += 2.0 * std::atan2(triple, denom);
  }
  return std::abs(excess) / (4 * kPi);
}

}  // namespace

EffectiveCone cone_effective_form(const TangentCone& k, int ambient_dim) {
  if (k.kind != TangentCone::Kind::proper) throw std::invalid_argument("cone not proper");
  std::vector<RatVec> normal_rows;
  for (const auto& c : k.constraints) normal_rows.push_back(to_rational(c.normal));
  RatMat n = RatMat::from_rows(normal_rows);
  std::size_t e = rank(n);

  EffectiveCone ec;
  ec.effective_dim = static_cast<int>(e);
  ec.lineality_dim = ambient_dim - static_cast<int>(e);

  // Exact choice of a spanning subset, then numeric orthonormalization.
  std::vector<RatVec> span;
  std::vector<std::vector<double>> basis;
  for (const RatVec& row : normal_rows) {
    if (span.size() == e) break;
    std::vector<RatVec> trial = span;
    trial.push_back(row);
    if (rank(RatMat::from_rows(trial)) != trial.size()) continue;
    span = std::move(trial);
    std::vector<double> b;
    for (const Rational& q : row) b.push_back(q.get_d());
    for (const auto& prev : basis) {
      double proj = ddot(b, prev);
      for (std::size_t i = 0; i < b.size(); ++i) b[i] -= proj * prev[i];
    }
    double len = std::sqrt(ddot(b, b));
    for (double& x : b) x /= len;
    basis.push_back(std::move(b));
  }

  for (const RatVec& row : normal_rows) {
    std::vector<double> d;
    for (const Rational& q : row) d.push_back(q.get_d());
    std::vector<double> proj;
    for (const auto& b : basis) proj.push_back(ddot(d, b));
    ec.projected_normals.push_back(std::move(proj));
  }
  return ec;
}

Value solid_angle_value(const TangentCone& k, const SolidAngleConfig& cfg, int ambient_dim) {
  if (k.kind == TangentCone::Kind::empty) return Value(0);
  if (k.kind == TangentCone::Kind::ambient) return Value(1);

  EffectiveCone ec = cone_effective_form(k, ambient_dim);
  int e = ec.effective_dim;

  if (e == 1) {
    // All normals are parallel: a halfspace (times lineality), or the
    // hyperplane itself when opposing normals are present.
    for (const auto& pn : ec.projected_normals)
      if (pn[0] * ec.projected_normals[0][0] < 0) return Value(0);
    return Value(Rational(1, 2));
  }
  if (e <= cfg.exact_dim_cap && e == 2)
    return Value::approx(planar_angle(ec.projected_normals), 1e-12);
  if (e <= cfg.exact_dim_cap && e == 3)
    return Value::approx(spherical_fraction(ec.projected_normals), 1e-12);

  // Monte Carlo over sphere directions in the ambient space; the lineality
  // split is implicit in the direction measure.
  std::vector<std::vector<double>> ns = normals_as_double(k);
  GaussStream g(cfg.rng_seed * 0x9E3779B97F4A7C15ull ^ k.hash());
  std::uint64_t n = cfg.mc_samples < 1000 ? 1000 : cfg.mc_samples;
  std::uint64_t hits = 0;
  std::vector<double> x(ambient_dim);
  for (std::uint64_t s = 0; s < n; ++s) {
    for (int i = 0; i < ambient_dim; ++i) x[i] = g.next();
    bool inside = true;
    for (const auto& m : ns)
      if (ddot(m, x) > 0) {
        inside = false;
        break;
      }
    if (inside) ++hits;
  }
  double frac = static_cast<double>(hits) / static_cast<double>(n);
  return Value::approx(frac, 3.0 * std::sqrt(0.25 / static_cast<double>(n)));
}

Value valuation_value(const TangentCone& k, const ValuationKind& val, int ambient_dim) {
  switch (val.kind) {
    case ValuationKind::Kind::ehrhart:
      return ehrhart_value(k);
    case ValuationKind::Kind::direction:
      return direction_value(k, val.dir);
    case ValuationKind::Kind::solid_angle:
      return solid_angle_value(k, val.cfg, ambient_dim);
  }
  throw std::logic_error("unreachable");
}

}  // namespace coneval
