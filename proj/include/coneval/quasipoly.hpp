#pragma once

#include <functional>
#include <string>
#include <vector>

#include "coneval/valuation.hpp"

namespace coneval {

// Period p with p constituent polynomials; constituent[r] governs arguments
// congruent to r mod p (mathematical residue, also for negative arguments).
struct QuasiPolynomial {
  int period = 1;
  int degree = 0;
  std::vector<std::vector<Value>> constituents;  // coefficient lists c0..cd

  std::string to_json() const;
  static QuasiPolynomial from_json(const std::string& text);
};

Value qp_evaluate(const QuasiPolynomial& q, const Int& t);

// Exact (or least-squares-free numeric) Lagrange fit per residue class;
// extra samples beyond degree+1 are consistency-checked against the fit.
QuasiPolynomial qp_interpolate(const std::vector<std::pair<Int, Value>>& samples, int period,
                               int degree);

struct CompareReport {
  bool equal = false;
  std::string detail;
};
CompareReport qp_compare(const QuasiPolynomial& a, const QuasiPolynomial& b, double tol);

// Smallest divisor p' of the period whose rotation leaves the constituents
// unchanged (within tol for approximate coefficients).
int qp_minimal_period(const QuasiPolynomial& q, double tol);

struct ReciprocityEntry {
  Int t;
  Value lhs;  // Q(-t)
  Value rhs;  // (-1)^d * oracle(t)
  double residual = 0;
  bool ok = false;
};

struct ReciprocityReport {
  std::vector<ReciprocityEntry> entries;
  bool pass = false;
  std::string to_json() const;
};

ReciprocityReport qp_reciprocity_check(const QuasiPolynomial& q,
                                       const std::function<Value(const Int&)>& oracle, int dim,
                                       const std::vector<Int>& t_range, double tol);

}  // namespace coneval
