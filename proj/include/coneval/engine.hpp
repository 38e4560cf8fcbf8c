#pragma once

#include <string>
#include <vector>

#include "coneval/conegf.hpp"
#include "coneval/quasipoly.hpp"

namespace coneval {

// Direct enumeration of V_{tP} = sum over lattice points of the bounding box
// of the valuation of the tangent cone. Exact for exact valuations.
Value count_direct(const Polytope& p, const ValuationKind& val, const Int& t, Openness o);

// Counting quasi-polynomial via triangulation, inclusion-exclusion face
// complex, and per-vertex-cone generating-function limits.
QuasiPolynomial quasipoly_brion(const Polytope& p, const ValuationKind& val,
                                Openness o = Openness::closed);

// Independent pipeline: direct counts sampled per residue class, then fitted.
// The extra sample per class is a built-in consistency check.
QuasiPolynomial quasipoly_interpolate(const Polytope& p, const ValuationKind& val, Openness o);

struct VerifyReport {
  ReciprocityReport reciprocity;
  bool symmetric_checked = false;  // valuations with V_P = V_{-P}
  bool symmetric_ok = true;
  bool pass() const { return reciprocity.pass && symmetric_ok; }
  std::string to_json() const;
};

// Checks Q(-t) = (-1)^d * V_{-P interior}(t) with the right-hand side from
// direct strict enumeration only.
VerifyReport verify_reciprocity(const Polytope& p, const ValuationKind& val,
                                const std::vector<Int>& t_range, double tol);

struct BrionCheckReport {
  struct Entry {
    std::vector<std::string> z;
    std::string lhs;
    std::string rhs;
    bool ok = false;
  };
  std::vector<Entry> entries;
  bool pass = false;
  std::string to_json() const;
};

// Numeric identity check: the summed vertex-cone rational functions of the
// t-dilated simplex equal the finite direct sum at random non-singular z.
BrionCheckReport brion_identity_check(const Polytope& simplex, const ValuationKind& val,
                                      const Int& t, int n_points, std::uint64_t seed);

// Sum over triangulation cells of |det| / d!.
Rational polytope_volume(const Polytope& p);

}  // namespace coneval
