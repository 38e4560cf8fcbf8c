#pragma once

#include <string>
#include <vector>

#include "coneval/linalg.hpp"
#include "coneval/rational.hpp"

namespace coneval {

enum class Openness { closed, relatively_open };

// normal . x <= offset, with a primitive integer normal.
struct Halfspace {
  IntVec normal;
  Rational offset;

  bool operator==(const Halfspace& o) const { return normal == o.normal && offset == o.offset; }
};

// A cone shifted to the origin: constraints are normal . x <= 0, or < 0 when
// strict. `empty` marks points outside the closure, `ambient` interior points.
struct TangentCone {
  enum class Kind { empty, ambient, proper };
  struct Constraint {
    IntVec normal;
    bool strict = false;
  };

  Kind kind = Kind::empty;
  std::vector<Constraint> constraints;  // non-empty iff proper

  static TangentCone make_empty() { return {Kind::empty, {}}; }
  static TangentCone make_ambient() { return {Kind::ambient, {}}; }
  static TangentCone proper(std::vector<Constraint> cs) {
    return {Kind::proper, std::move(cs)};
  }

  // Stable content hash, used to derive per-cone Monte Carlo streams.
  std::uint64_t hash() const;
};

class Polytope {
 public:
  // Validates: non-empty duplicate-free vertex list, full affine dimension,
  // and every listed vertex genuinely extreme. Facets are computed eagerly.
  static Polytope from_vertices(int ambient_dim, std::vector<RatVec> vertices);

  int dim() const { return dim_; }
  const std::vector<RatVec>& vertices() const { return vertices_; }
  const std::vector<Halfspace>& facets() const { return facets_; }

  static Polytope from_json(const std::string& text);
  std::string to_json() const;

 private:
  Polytope() = default;
  int dim_ = 0;
  std::vector<RatVec> vertices_;
  std::vector<Halfspace> facets_;
};

// Supporting halfspaces of conv(vertices), full-dimensional case, by
// exhaustive hyperplane search over vertex subsets. Deterministic order.
std::vector<Halfspace> facet_enumeration(int dim, const std::vector<RatVec>& vertices);

// lcm of the vertex coordinate denominators; 1 for lattice polytopes.
Int polytope_denominator(const Polytope& p);

// Dilate by t (t < 0 reflects); facets are transformed, not recomputed.
Polytope scale_and_negate(const Polytope& p, const Int& t);

bool membership(const std::vector<Halfspace>& facets, const RatVec& m, Openness o);

// Tangent cone of p at m, shifted to the origin. With o = relatively_open the
// tight-facet constraints become strict (the cone of the relative interior).
TangentCone tangent_cone(const Polytope& p, const RatVec& m, Openness o);

}  // namespace coneval
