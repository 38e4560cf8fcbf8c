#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace coneval {

// Exact arbitrary-precision scalars. mpq_class keeps gcd(|num|, den) = 1 and
// den > 0 after every arithmetic operation, which is exactly the canonical
// form we promise everywhere.
using Int = mpz_class;
using Rational = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rational>;

// Parses "p/q" or "p". The result is canonicalized; "4/6" becomes 2/3.
inline Rational rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (sgn(Rational(q.get_den())) <= 0)
    throw std::invalid_argument("non-positive denominator: " + s);
  q.canonicalize();
  return q;
}

// "p/q" with q > 0 in lowest terms; integers print without "/1".
inline std::string rat_str(const Rational& q) { return q.get_str(); }

inline Int rat_floor(const Rational& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Int rat_ceil(const Rational& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

// Row-major rectangular matrix of exact rationals.
struct RatMat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> a;

  RatMat() = default;
  RatMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Rational& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static RatMat from_rows(const std::vector<RatVec>& rws) {
    if (rws.empty()) return RatMat();
    RatMat m(rws.size(), rws[0].size());
    for (std::size_t i = 0; i < rws.size(); ++i) {
      if (rws[i].size() != m.cols) throw std::invalid_argument("ragged rows");
      for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rws[i][j];
    }
    return m;
  }

  static RatMat from_cols(const std::vector<RatVec>& cls) {
    if (cls.empty()) return RatMat();
    RatMat m(cls[0].size(), cls.size());
    for (std::size_t j = 0; j < cls.size(); ++j) {
      if (cls[j].size() != m.rows) throw std::invalid_argument("ragged columns");
      for (std::size_t i = 0; i < m.rows; ++i) m.at(i, j) = cls[j][i];
    }
    return m;
  }

  static RatMat identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
};

inline RatVec to_rational(const IntVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
  return r;
}

inline Rational dot(const RatVec& x, const RatVec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

inline Rational dot(const IntVec& n, const RatVec& x) {
  if (n.size() != x.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < n.size(); ++i) s += Rational(n[i]) * x[i];
  return s;
}

inline Int dot(const IntVec& x, const IntVec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

}  // namespace coneval
