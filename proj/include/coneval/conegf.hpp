#pragma once

#include <vector>

#include "coneval/triangulate.hpp"
#include "coneval/valuation.hpp"

namespace coneval {

// One summand  weight * z^(base + s*dilation) / prod_g (1 - z^g)  of a
// vertex-cone generating function.
struct GFTerm {
  Value weight;
  IntVec base_exp;        // a
  IntVec dilation_exp;    // u, multiplied by the series parameter s
  std::vector<IntVec> gens;  // denominator generators
};

// beta of the (r + p*s)-dilated vertex cone, as a function of s.
struct ConeSeries {
  int residue = 0;
  int period = 1;
  std::vector<GFTerm> terms;
};

// Polynomial in the series parameter s, low degree first.
using PolyS = std::vector<Value>;

// Primitive integer edge directions from vertex `vertex_index` of S to the
// other vertices; dim(S) of them, linearly independent.
std::vector<IntVec> vertex_cone_generators(const Simplex& s, std::size_t vertex_index);

struct ParallelepipedPoint {
  IntVec point;
  RatVec coeffs;
};

// Lattice points of apex + sum c_k gens_k with each c_k in [0,1) (lower) or
// (0,1] (upper), together with their exact coefficients. Works for fewer
// generators than ambient dimensions (points off the affine hull are skipped).
std::vector<ParallelepipedPoint> parallelepiped_points(const RatVec& apex,
                                                       const std::vector<IntVec>& gens,
                                                       const std::vector<bool>& upper);

// beta_{(r+ps) S_v} built by the face decomposition of the simple vertex
// cone: every generator subset T contributes its tangent-cone weight times
// the (0,1]-parallelepiped points over the generators in T.
ConeSeries beta_vertex_cone(const Simplex& s, std::size_t vertex_index,
                            const ValuationKind& val, int r, int p, Openness openness);

// Integer direction with lambda . w != 0 for every generator; deterministic
// (powers of the smallest working base).
IntVec choose_generic_direction(const std::vector<IntVec>& generators, int dim);

// Substitutes z = exp(eps * lambda) and extracts the eps^0 coefficient of the
// summed Laurent expansions; the negative powers must cancel (Brion).
// The result is V(r + p*s) as a polynomial in s of degree <= degree_cap.
PolyS limit_at_one(const std::vector<ConeSeries>& series, const IntVec& lambda, int degree_cap);

// Exact evaluation of the summed terms at a concrete s and rational z.
Value evaluate_gf_at(const std::vector<ConeSeries>& series, const Int& s_value, const RatVec& z);

}  // namespace coneval
