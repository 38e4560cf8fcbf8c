#include "coneval/linalg.hpp"

#include <stdexcept>

namespace coneval {

IntVec primitive_vector(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  if (g == 0) throw std::invalid_argument("zero direction");
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

IntVec primitive_direction(const RatVec& v) {
  Int l = 1;
  for (const Rational& q : v) l = lcm(l, Int(q.get_den()));
  IntVec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational s = v[i] * Rational(l);
    w[i] = s.get_num();  // integral after clearing denominators
  }
  return primitive_vector(w);
}

namespace {

// Row echelon form in place. Returns pivot column per pivot row.
std::vector<std::size_t> echelon(RatMat& m, int* sign = nullptr) {
  std::vector<std::size_t> pivots;
  if (sign) *sign = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t p = row;
    while (p < m.rows && m.at(p, col) == 0) ++p;
    if (p == m.rows) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
      if (sign) *sign = -*sign;
    }
    for (std::size_t i = row + 1; i < m.rows; ++i) {
      if (m.at(i, col) == 0) continue;
      Rational f = m.at(i, col) / m.at(row, col);
      for (std::size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Rational determinant(const RatMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant: non-square matrix");
  if (m.rows == 0) return 1;
  RatMat w = m;
  int sign;
  std::vector<std::size_t> pivots = echelon(w, &sign);
  if (pivots.size() < m.rows) return 0;
  Rational d = sign;
  for (std::size_t i = 0; i < m.rows; ++i) d *= w.at(i, i);
  return d;
}

std::size_t rank(const RatMat& m) {
  RatMat w = m;
  return echelon(w).size();
}

std::optional<RatVec> solve_exact(const RatMat& m, const RatVec& b) {
  if (b.size() != m.rows) throw std::invalid_argument("solve_exact: size mismatch");
  RatMat aug(m.rows, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  std::vector<std::size_t> pivots = echelon(aug);
  // A pivot in the augmented column means 0 = nonzero: inconsistent.
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
  if (pivots.size() < m.cols) throw std::invalid_argument("non-unique solution");
  RatVec x(m.cols);
  for (std::size_t i = m.cols; i-- > 0;) {
    Rational s = aug.at(i, m.cols);
    for (std::size_t j = i + 1; j < m.cols; ++j) s -= aug.at(i, j) * x[j];
    x[i] = s / aug.at(i, i);
  }
  return x;
}

std::vector<RatVec> nullspace(const RatMat& m) {
  RatMat w = m;
  std::vector<std::size_t> pivots = echelon(w);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  // Back-substitute one basis vector per free column.
  std::vector<RatVec> basis;
  for (std::size_t free_col = 0; free_col < m.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    RatVec x(m.cols);
    x[free_col] = 1;
    for (std::size_t pi = pivots.size(); pi-- > 0;) {
      std::size_t pc = pivots[pi];
      Rational s = 0;
      for (std::size_t j = pc + 1; j < m.cols; ++j) s -= w.at(pi, j) * x[j];
      x[pc] = s / w.at(pi, pc);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

RatMat transpose(const RatMat& m) {
  RatMat t(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

RatMat matmul(const RatMat& a, const RatMat& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matmul: shape mismatch");
  RatMat c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

}  // namespace coneval
