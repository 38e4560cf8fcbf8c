#pragma once

#include <vector>

#include "coneval/polytope.hpp"

namespace coneval {

// k-dimensional simplex embedded in R^d: k+1 affinely independent vertices.
struct Simplex {
  int ambient_dim = 0;
  std::vector<RatVec> vertices;

  int dim() const { return static_cast<int>(vertices.size()) - 1; }
};

// Faces of a triangulation with inclusion-exclusion coefficients c_F chosen
// so that sum over faces G containing F of c_G equals 1; then the weighted
// indicator sum of all faces is identically 1 on the triangulated polytope.
struct FaceComplex {
  struct Entry {
    Simplex simplex;
    long long coeff = 0;
  };
  std::vector<Entry> faces;
};

// Fan triangulation into d-simplices using only vertices of P. Deterministic.
std::vector<Simplex> triangulate_polytope(const Polytope& p);

// Enumerates all faces of the cells, deduplicates, and assigns coefficients
// by descending dimension: c_F = 1 - sum of c_G over faces G strictly
// containing F. Validates that the cells form a simplicial complex.
FaceComplex build_face_complex(const std::vector<Simplex>& cells);

}  // namespace coneval
