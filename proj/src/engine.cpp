#include "coneval/engine.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace coneval {

namespace {

// Visits every lattice point in the bounding box of the vertex set.
template <typename Fn>
void for_each_box_point(const std::vector<RatVec>& vertices, Fn&& fn) {
  const std::size_t d = vertices[0].size();
  std::vector<Int> lo(d), hi(d);
  Int cells = 1;
  for (std::size_t i = 0; i < d; ++i) {
    Rational l = vertices[0][i], h = vertices[0][i];
    for (const RatVec& v : vertices) {
      if (v[i] < l) l = v[i];
      if (v[i] > h) h = v[i];
    }
    lo[i] = rat_ceil(l);
    hi[i] = rat_floor(h);
    if (hi[i] < lo[i]) return;
    cells *= hi[i] - lo[i] + 1;
  }
  if (cells > 100000000) throw std::invalid_argument("instance too large");

  RatVec m(d);
  IntVec mi(d);
  auto scan = [&](auto&& self, std::size_t coord) -> void {
    if (coord == d) {
      fn(m, mi);
      return;
    }
    for (Int x = lo[coord]; x <= hi[coord]; ++x) {
      mi[coord] = x;
      m[coord] = Rational(x);
      self(self, coord + 1);
    }
  };
  scan(scan, 0);
}

std::vector<IntVec> all_edge_directions(const Polytope& p) {
  std::set<std::vector<std::string>> seen;
  std::vector<IntVec> dirs;
  const auto& vs = p.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (i == j) continue;
      RatVec diff(vs[i].size());
      for (std::size_t t = 0; t < diff.size(); ++t) diff[t] = vs[j][t] - vs[i][t];
      IntVec dir = primitive_direction(diff);
      std::vector<std::string> key;
      for (const Int& x : dir) key.push_back(x.get_str());
      if (seen.insert(key).second) dirs.push_back(std::move(dir));
    }
  return dirs;
}

// s = (t - r) / p turns a polynomial in the series parameter into the
// residue-class constituent in t.
std::vector<Value> substitute_dilation(const PolyS& poly, int r, int p) {
  const std::size_t n = poly.size();
  std::vector<Value> out(n, Value(0));
  std::vector<std::vector<Rational>> binom(n, std::vector<Rational>(n));
  for (std::size_t j = 0; j < n; ++j) {
    binom[j][0] = 1;
    for (std::size_t m = 1; m <= j; ++m)
      binom[j][m] = binom[j - 1][m - 1] + (m <= j - 1 ? binom[j - 1][m] : Rational(0));
  }
  Rational pq{Int(p)};
  for (std::size_t j = 0; j < n; ++j) {
    Rational inv_pj = 1;  // 1 / p^j
    for (std::size_t i = 0; i < j; ++i) inv_pj /= pq;
    Rational neg_r_pow = 1;
    for (std::size_t m = j + 1; m-- > 0;) {
      // coefficient of t^m from a_j ((t - r)/p)^j
      out[m] += poly[j] * Value(Rational(binom[j][m] * neg_r_pow * inv_pj));
      neg_r_pow *= Rational(-Int(r));
    }
  }
  return out;
}

}  // namespace

Value count_direct(const Polytope& p, const ValuationKind& val, const Int& t, Openness o) {
  if (t < 1) throw std::invalid_argument("dilation must be >= 1");
  Polytope tp = scale_and_negate(p, t);
  Value total(0);
  for_each_box_point(tp.vertices(), [&](const RatVec& m, const IntVec&) {
    TangentCone k = tangent_cone(tp, m, o);
    if (k.kind == TangentCone::Kind::empty) return;
    total += valuation_value(k, val, p.dim());
  });
  return total;
}

QuasiPolynomial quasipoly_brion(const Polytope& p, const ValuationKind& val, Openness o) {
  const int d = p.dim();
  const int period = static_cast<int>(polytope_denominator(p).get_si());
  std::vector<Simplex> cells = triangulate_polytope(p);
  FaceComplex complex = build_face_complex(cells);
  IntVec lambda = choose_generic_direction(all_edge_directions(p), d);

  QuasiPolynomial q;
  q.period = period;
  q.degree = d;
  for (int r = 0; r < period; ++r) {
    PolyS total(static_cast<std::size_t>(d) + 1, Value(0));
    for (const FaceComplex::Entry& face : complex.faces) {
      if (face.coeff == 0) continue;
      std::vector<ConeSeries> series;
      for (std::size_t v = 0; v < face.simplex.vertices.size(); ++v)
        series.push_back(beta_vertex_cone(face.simplex, v, val, r, period, o));
      PolyS poly = limit_at_one(series, lambda, d);
      Value c{Rational(Int(static_cast<long>(face.coeff)))};
      for (std::size_t j = 0; j < total.size(); ++j) total[j] += c * poly[j];
    }
    q.constituents.push_back(substitute_dilation(total, r, period));
  }

  bool leading_nonzero = false;
  for (const auto& c : q.constituents) {
    const Value& lead = c.at(static_cast<std::size_t>(d));
    if (lead.exact() ? !lead.is_exact_zero() : std::abs(lead.num()) > lead.err())
      leading_nonzero = true;
  }
  if (!leading_nonzero) throw std::runtime_error("degree deficiency in assembled quasi-polynomial");
  return q;
}

QuasiPolynomial quasipoly_interpolate(const Polytope& p, const ValuationKind& val, Openness o) {
  const int d = p.dim();
  const int period = static_cast<int>(polytope_denominator(p).get_si());
  std::vector<std::pair<Int, Value>> samples;
  for (int r = 0; r < period; ++r)
    for (int j = 1; j <= d + 2; ++j) {
      Int t = Int(r) + Int(period) * j;
      samples.emplace_back(t, count_direct(p, val, t, o));
    }
  return qp_interpolate(samples, period, d);
}

VerifyReport verify_reciprocity(const Polytope& p, const ValuationKind& val,
                                const std::vector<Int>& t_range, double tol) {
  QuasiPolynomial q = quasipoly_brion(p, val, Openness::closed);
  Polytope neg = scale_and_negate(p, Int(-1));
  auto oracle = [&](const Int& t) {
    return count_direct(neg, val, t, Openness::relatively_open);
  };
  VerifyReport rep;
  rep.reciprocity = qp_reciprocity_check(q, oracle, p.dim(), t_range, tol);

  if (val.kind != ValuationKind::Kind::direction) {
    // V_P = V_{-P} for the symmetric valuations: the un-negated interior
    // count must agree with the oracle.
    rep.symmetric_checked = true;
    for (const Int& t : t_range) {
      Value a = count_direct(p, val, t, Openness::relatively_open);
      Value b = oracle(t);
      bool ok;
      if (a.exact() && b.exact())
        ok = tol == 0.0 ? a.rat() == b.rat() : std::abs((a - b).num()) <= tol;
      else
        ok = std::abs(a.num() - b.num()) <= tol + a.err() + b.err();
      rep.symmetric_ok = rep.symmetric_ok && ok;
    }
  }
  return rep;
}

BrionCheckReport brion_identity_check(const Polytope& simplex_poly, const ValuationKind& val,
                                      const Int& t, int n_points, std::uint64_t seed) {
  const int d = simplex_poly.dim();
  if (static_cast<int>(simplex_poly.vertices().size()) != d + 1)
    throw std::invalid_argument("brion-check requires a simplex");
  if (val.kind == ValuationKind::Kind::solid_angle)
    throw std::invalid_argument("brion-check requires an exact valuation");
  if (t < 1) throw std::invalid_argument("dilation must be >= 1");

  Simplex s;
  s.ambient_dim = d;
  s.vertices = simplex_poly.vertices();

  const int period = static_cast<int>(polytope_denominator(simplex_poly).get_si());
  const int r = static_cast<int>(((t.get_si() % period) + period) % period);
  const Int sval = (t - r) / period;

  std::vector<ConeSeries> series;
  for (std::size_t v = 0; v < s.vertices.size(); ++v)
    series.push_back(beta_vertex_cone(s, v, val, r, period, Openness::closed));

  Polytope ts = scale_and_negate(simplex_poly, t);

  std::mt19937_64 rng(seed);
  BrionCheckReport rep;
  rep.pass = true;
  for (int n = 0; n < n_points; ++n) {
    RatVec z;
    for (int attempt = 0;; ++attempt) {
      if (attempt > 1000) throw std::runtime_error("could not find non-singular z");
      z.clear();
      for (int i = 0; i < d; ++i) {
        long num = static_cast<long>(rng() % 11) - 5;
        long den = static_cast<long>(rng() % 3) + 1;
        if (num == 0) num = 6;
        Rational zi(num, den);
        zi.canonicalize();
        z.push_back(zi);
      }
      bool singular = false;
      for (const ConeSeries& cs : series)
        for (const GFTerm& term : cs.terms)
          for (const IntVec& g : term.gens) {
            Rational zg = 1;
            for (int i = 0; i < d; ++i) {
              Rational base = g[i] < 0 ? Rational(1 / z[i]) : z[i];
              Int e = abs(g[i]);
              for (Int j = 0; j < e; ++j) zg *= base;
            }
            if (zg == 1) singular = true;
          }
      if (!singular) break;
    }

    Value lhs = evaluate_gf_at(series, sval, z);
    Value rhs(0);
    for_each_box_point(ts.vertices(), [&](const RatVec& m, const IntVec& mi) {
      TangentCone k = tangent_cone(ts, m, Openness::closed);
      if (k.kind == TangentCone::Kind::empty) return;
      Value w = valuation_value(k, val, d);
      if (w.is_exact_zero()) return;
      Rational zm = 1;
      for (int i = 0; i < d; ++i) {
        Rational base = mi[i] < 0 ? Rational(1 / z[i]) : z[i];
        Int e = abs(mi[i]);
        for (Int j = 0; j < e; ++j) zm *= base;
      }
      rhs += w * Value(zm);
    });

    BrionCheckReport::Entry e;
    for (const Rational& zi : z) e.z.push_back(rat_str(zi));
    e.lhs = lhs.str();
    e.rhs = rhs.str();
    e.ok = lhs.rat() == rhs.rat();
    rep.pass = rep.pass && e.ok;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

Rational polytope_volume(const Polytope& p) {
  const std::size_t d = static_cast<std::size_t>(p.dim());
  Rational vol = 0;
  Rational dfact = 1;
  for (std::size_t i = 1; i <= d; ++i) dfact *= Int(i);
  for (const Simplex& s : triangulate_polytope(p)) {
    RatMat edges(d, d);
    for (std::size_t i = 1; i <= d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        edges.at(i - 1, j) = s.vertices[i][j] - s.vertices[0][j];
    Rational det = determinant(edges);
    vol += (det < 0 ? Rational(-det) : det) / dfact;
  }
  return vol;
}

std::string VerifyReport::to_json() const {
  nlohmann::json j = nlohmann::json::parse(reciprocity.to_json());
  j["symmetric_checked"] = symmetric_checked;
  j["symmetric_ok"] = symmetric_ok;
  j["pass"] = pass();
  return j.dump();
}

std::string BrionCheckReport::to_json() const {
  nlohmann::json j;
  j["pass"] = pass;
  nlohmann::json es = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json je;
    je["z"] = e.z;
    je["lhs"] = e.lhs;
    je["rhs"] = e.rhs;
    je["ok"] = e.ok;
    es.push_back(je);
  }
  j["entries"] = es;
  return j.dump();
}

}  // namespace coneval
