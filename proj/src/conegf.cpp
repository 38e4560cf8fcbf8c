#include "coneval/conegf.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace coneval {

namespace {

Rational rat_pow(const Rational& z, long e) {
  if (z == 0) throw std::invalid_argument("zero base");
  Rational r = 1;
  Rational b = e < 0 ? Rational(1 / z) : z;
  unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : e;
  while (n) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

Rational z_power(const RatVec& z, const IntVec& e) {
  Rational r = 1;
  for (std::size_t i = 0; i < z.size(); ++i) r *= rat_pow(z[i], e[i].get_si());
  return r;
}

}  // namespace

std::vector<IntVec> vertex_cone_generators(const Simplex& s, std::size_t vertex_index) {
  if (vertex_index >= s.vertices.size()) throw std::invalid_argument("bad vertex index");
  const RatVec& v = s.vertices[vertex_index];
  std::vector<IntVec> gens;
  for (std::size_t i = 0; i < s.vertices.size(); ++i) {
    if (i == vertex_index) continue;
    RatVec diff(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) diff[j] = s.vertices[i][j] - v[j];
    gens.push_back(primitive_direction(diff));
  }
  std::vector<RatVec> cols;
  for (const IntVec& g : gens) cols.push_back(to_rational(g));
  if (!cols.empty() && rank(RatMat::from_cols(cols)) != cols.size())
    throw std::invalid_argument("degenerate simplex");
  return gens;
}

std::vector<ParallelepipedPoint> parallelepiped_points(const RatVec& apex,
                                                       const std::vector<IntVec>& gens,
                                                       const std::vector<bool>& upper) {
  const std::size_t d = apex.size();
  if (upper.size() != gens.size()) throw std::invalid_argument("orientation size mismatch");
  std::vector<RatVec> cols;
  for (const IntVec& g : gens) cols.push_back(to_rational(g));
  RatMat gmat = cols.empty() ? RatMat(d, 0) : RatMat::from_cols(cols);
  gmat.rows = d;  // keep shape when there are no generators
  if (!cols.empty() && rank(gmat) != cols.size())
    throw std::invalid_argument("dependent generators");

  // Integer bounding box of the closed parallelepiped.
  std::vector<Int> lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    Rational l = apex[i], h = apex[i];
    for (const IntVec& g : gens) {
      if (g[i] < 0)
        l += Rational(g[i]);
      else
        h += Rational(g[i]);
    }
    lo[i] = rat_ceil(l);
    hi[i] = rat_floor(h);
  }

  std::vector<ParallelepipedPoint> out;
  IntVec m(d);
  auto scan = [&](auto&& self, std::size_t coord) -> void {
    if (coord == d) {
      RatVec rhs(d);
      for (std::size_t i = 0; i < d; ++i) rhs[i] = Rational(m[i]) - apex[i];
      std::optional<RatVec> c;
      if (gens.empty()) {
        bool zero = true;
        for (const Rational& x : rhs)
          if (x != 0) zero = false;
        if (zero) c = RatVec{};
      } else {
        c = solve_exact(gmat, rhs);
      }
      if (!c) return;  // off the affine hull
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const Rational& ck = (*c)[k];
        if (upper[k] ? !(ck > 0 && ck <= 1) : !(ck >= 0 && ck < 1)) return;
      }
      out.push_back({m, *c});
      return;
    }
    for (Int x = lo[coord]; x <= hi[coord]; ++x) {
      m[coord] = x;
      self(self, coord + 1);
    }
  };
  scan(scan, 0);
  return out;
}

ConeSeries beta_vertex_cone(const Simplex& s, std::size_t vertex_index,
                            const ValuationKind& val, int r, int p, Openness openness) {
  if (p <= 0 || r < 0 || r >= p) throw std::invalid_argument("bad residue");
  const std::size_t d = static_cast<std::size_t>(s.ambient_dim);
  const std::size_t k = static_cast<std::size_t>(s.dim());
  const RatVec& v = s.vertices.at(vertex_index);
  std::vector<IntVec> gens = vertex_cone_generators(s, vertex_index);

  RatVec apex(d);
  for (std::size_t i = 0; i < d; ++i) apex[i] = Rational(Int(r)) * v[i];

  IntVec dil(d);
  for (std::size_t i = 0; i < d; ++i) {
    Rational pv = Rational(Int(p)) * v[i];
    if (!is_integral(pv)) throw std::invalid_argument("period does not clear vertex denominator");
    dil[i] = pv.get_num();
  }

  // Facet normals of the simple cone: negated dual basis of the generators,
  // solved through the Gram matrix so it also works for k < d.
  std::vector<IntVec> facet_normals;
  if (k > 0) {
    std::vector<RatVec> cols;
    for (const IntVec& g : gens) cols.push_back(to_rational(g));
    RatMat w = RatMat::from_cols(cols);
    RatMat gram = matmul(transpose(w), w);
    for (std::size_t j = 0; j < k; ++j) {
      RatVec ej(k);
      ej[j] = 1;
      RatVec y = *solve_exact(gram, ej);
      RatVec dual(d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t l = 0; l < k; ++l) dual[i] += cols[l][i] * y[l];
      for (Rational& x : dual) x = -x;
      facet_normals.push_back(primitive_direction(dual));
    }
  }

  // Equality constraints pinning the span of the generators, as +/- pairs.
  std::vector<IntVec> span_normals;
  {
    std::vector<RatVec> rows;
    for (const IntVec& g : gens) rows.push_back(to_rational(g));
    RatMat m = rows.empty() ? RatMat(0, d) : RatMat::from_rows(rows);
    m.cols = d;
    for (const RatVec& h : nullspace(m)) span_normals.push_back(primitive_direction(h));
  }

  const bool strict = openness == Openness::relatively_open;
  ConeSeries out;
  out.residue = r;
  out.period = p;
  for (std::size_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<TangentCone::Constraint> cs;
    for (std::size_t j = 0; j < k; ++j)
      if (!(mask & (1u << j))) cs.push_back({facet_normals[j], strict});
    for (const IntVec& h : span_normals) {
      IntVec neg(h.size());
      for (std::size_t i = 0; i < h.size(); ++i) neg[i] = -h[i];
      cs.push_back({h, false});
      cs.push_back({std::move(neg), false});
    }
    TangentCone cone = cs.empty() ? TangentCone::make_ambient() : TangentCone::proper(std::move(cs));
    Value weight = valuation_value(cone, val, s.ambient_dim);
    if (weight.is_exact_zero()) continue;

    std::vector<IntVec> sub_gens;
    for (std::size_t j = 0; j < k; ++j)
      if (mask & (1u << j)) sub_gens.push_back(gens[j]);
    std::vector<bool> upper(sub_gens.size(), true);
    for (const ParallelepipedPoint& pt : parallelepiped_points(apex, sub_gens, upper))
      out.terms.push_back({weight, pt.point, dil, sub_gens});
  }
  return out;
}

IntVec choose_generic_direction(const std::vector<IntVec>& generators, int dim) {
  for (const IntVec& g : generators) {
    bool zero = true;
    for (const Int& x : g)
      if (x != 0) zero = false;
    if (zero) throw std::invalid_argument("zero generator");
  }
  for (Int base = 2;; ++base) {
    IntVec lambda(dim);
    Int p = 1;
    for (int i = 0; i < dim; ++i) {
      lambda[i] = p;
      p *= base;
    }
    bool ok = true;
    for (const IntVec& g : generators)
      if (dot(lambda, g) == 0) {
        ok = false;
        break;
      }
    if (ok) return lambda;
  }
}

namespace {

// Polynomials in s with rational coefficients, low degree first.
using PolyQ = std::vector<Rational>;

PolyQ polyq_mul(const PolyQ& a, const PolyQ& b) {
  if (a.empty() || b.empty()) return {};
  PolyQ c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// Power series in eps (coefficients PolyQ), truncated at eps^cap.
using SeriesQ = std::vector<PolyQ>;

SeriesQ series_mul(const SeriesQ& a, const SeriesQ& b, std::size_t cap) {
  SeriesQ c(cap + 1);
  for (std::size_t i = 0; i < a.size() && i <= cap; ++i)
    for (std::size_t j = 0; j < b.size() && i + j <= cap; ++j) {
      PolyQ prod = polyq_mul(a[i], b[j]);
      PolyQ& dst = c[i + j];
      if (dst.size() < prod.size()) dst.resize(prod.size());
      for (std::size_t t = 0; t < prod.size(); ++t) dst[t] += prod[t];
    }
  return c;
}

// Coefficients of 1 / E(x) where E(x) = (e^x - 1)/x = sum x^i/(i+1)!.
std::vector<Rational> inv_e_series(std::size_t cap) {
  std::vector<Rational> e(cap + 1), b(cap + 1);
  Rational fact = 1;
  for (std::size_t i = 0; i <= cap; ++i) {
    fact *= Int(i + 1);
    e[i] = Rational(1) / fact;  // 1/(i+1)!
  }
  b[0] = 1;
  for (std::size_t n = 1; n <= cap; ++n) {
    Rational s = 0;
    for (std::size_t i = 1; i <= n; ++i) s += e[i] * b[n - i];
    b[n] = -s;
  }
  return b;
}

}  // namespace

PolyS limit_at_one(const std::vector<ConeSeries>& series, const IntVec& lambda, int degree_cap) {
  if (series.empty()) throw std::invalid_argument("no series");
  for (const ConeSeries& cs : series)
    if (cs.residue != series[0].residue || cs.period != series[0].period)
      throw std::invalid_argument("mixed residues");

  std::size_t max_pole = 0;
  for (const ConeSeries& cs : series)
    for (const GFTerm& t : cs.terms) max_pole = std::max(max_pole, t.gens.size());
  std::vector<Rational> inv_e = inv_e_series(max_pole);

  // Laurent accumulator: index q holds the eps^(q - max_pole) coefficient.
  std::vector<PolyS> acc(max_pole + 1,
                         PolyS(static_cast<std::size_t>(degree_cap) + 1, Value(0)));

  for (const ConeSeries& cs : series) {
    for (const GFTerm& term : cs.terms) {
      const std::size_t n = term.gens.size();
      Int alpha = dot(lambda, term.base_exp);
      Int beta = dot(lambda, term.dilation_exp);

      // exp(eps (alpha + beta s)) truncated at eps^n.
      SeriesQ num(n + 1);
      PolyQ lin{Rational(alpha), Rational(beta)};
      PolyQ pow{Rational(1)};
      Rational fact = 1;
      for (std::size_t j = 0; j <= n; ++j) {
        if (j > 0) {
          pow = polyq_mul(pow, lin);
          fact *= Int(j);
        }
        num[j] = pow;
        for (Rational& c : num[j]) c /= fact;
      }

      Rational scale = 1;  // (-1)^n / prod mu_g
      SeriesQ prod = num;
      for (const IntVec& g : term.gens) {
        Int mu = dot(lambda, g);
        if (mu == 0) throw std::invalid_argument("singular direction");
        scale /= Rational(-mu);
        SeriesQ factor(n + 1);
        Rational mu_pow = 1;
        for (std::size_t i = 0; i <= n; ++i) {
          factor[i] = PolyQ{inv_e[i] * mu_pow};
          mu_pow *= Rational(mu);
        }
        prod = series_mul(prod, factor, n);
      }

      for (std::size_t j = 0; j <= n && j <= max_pole + 0; ++j) {
        // eps power j - n; accumulator index (j - n) + max_pole.
        std::size_t slot = max_pole + j - n;
        for (std::size_t t = 0; t < prod[j].size(); ++t) {
          if (t > static_cast<std::size_t>(degree_cap)) {
            if (prod[j][t] != 0) throw std::logic_error("series degree exceeds cap");
            continue;
          }
          acc[slot][t] += term.weight * Value(Rational(prod[j][t] * scale));
        }
      }
    }
  }

  for (std::size_t slot = 0; slot < max_pole; ++slot) {
    for (const Value& c : acc[slot]) {
      if (c.exact()) {
        if (!c.is_exact_zero()) throw std::runtime_error("Brion cancellation failed");
      } else if (std::abs(c.num()) > c.err() + 1e-6) {
        throw std::runtime_error("Brion cancellation failed");
      }
    }
  }
  return acc[max_pole];
}

Value evaluate_gf_at(const std::vector<ConeSeries>& series, const Int& s_value, const RatVec& z) {
  Value total(0);
  for (const ConeSeries& cs : series) {
    for (const GFTerm& term : cs.terms) {
      Rational denom = 1;
      for (const IntVec& g : term.gens) {
        Rational zg = z_power(z, g);
        if (zg == 1) throw std::invalid_argument("singular evaluation point");
        denom *= (1 - zg);
      }
      IntVec e = term.base_exp;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += s_value * term.dilation_exp[i];
      total += term.weight * Value(Rational(z_power(z, e) / denom));
    }
  }
  return total;
}

}  // namespace coneval
