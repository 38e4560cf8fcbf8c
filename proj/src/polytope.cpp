#include "coneval/polytope.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace coneval {

std::uint64_t TangentCone::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  mix(kind == Kind::empty ? "e" : kind == Kind::ambient ? "a" : "p");
  for (const Constraint& c : constraints) {
    for (const Int& x : c.normal) mix(x.get_str() + ",");
    mix(c.strict ? "<;" : "<=;");
  }
  return h;
}

namespace {

// Affine rank of the vertex set (dimension of its affine hull).
std::size_t affine_rank(const std::vector<RatVec>& pts) {
  if (pts.size() <= 1) return 0;
  RatMat diffs(pts.size() - 1, pts[0].size());
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts[0].size(); ++j)
      diffs.at(i - 1, j) = pts[i][j] - pts[0][j];
  return rank(diffs);
}

void next_subset(std::vector<std::size_t>& idx, std::size_t n, bool& done) {
  std::size_t k = idx.size();
  std::size_t i = k;
  while (i-- > 0) {
    if (idx[i] + (k - i) < n) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return;
    }
  }
  done = true;
}

}  // namespace

std::vector<Halfspace> facet_enumeration(int dim, const std::vector<RatVec>& vertices) {
  const std::size_t d = static_cast<std::size_t>(dim);
  const std::size_t n = vertices.size();
  if (affine_rank(vertices) != d) throw std::invalid_argument("not full-dimensional");

  std::set<std::pair<std::vector<std::string>, std::string>> seen;
  std::vector<Halfspace> facets;

  std::vector<std::size_t> idx(d);
  for (std::size_t i = 0; i < d; ++i) idx[i] = i;
  bool done = n < d;
  while (!done) {
    // Hyperplane spanned by the chosen d vertices, if any.
    RatMat diffs(d - 1, d);
    for (std::size_t i = 1; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        diffs.at(i - 1, j) = vertices[idx[i]][j] - vertices[idx[0]][j];
    std::vector<RatVec> ns = nullspace(diffs);
    if (ns.size() == 1) {
      IntVec normal = primitive_direction(ns[0]);
      Rational offset = dot(normal, vertices[idx[0]]);
      bool all_le = true, all_ge = true;
      for (const RatVec& v : vertices) {
        int c = cmp(dot(normal, v), offset);
        if (c > 0) all_le = false;
        if (c < 0) all_ge = false;
      }
      if (all_le || all_ge) {
        if (all_ge && !all_le) {
          for (Int& x : normal) x = -x;
          offset = -offset;
        }
        // Normalize to an integer offset with jointly primitive coefficients
        // (e.g. [0,1/2] gets 2x <= 1, not x <= 1/2).
        Int den = offset.get_den();
        if (den != 1) {
          for (Int& x : normal) x *= den;
          offset = Rational(Int(offset.get_num()));
        }
        std::vector<std::string> key;
        for (const Int& x : normal) key.push_back(x.get_str());
        if (seen.emplace(key, rat_str(offset)).second)
          facets.push_back({std::move(normal), std::move(offset)});
      }
    }
    next_subset(idx, n, done);
  }
  return facets;
}

Polytope Polytope::from_vertices(int ambient_dim, std::vector<RatVec> vertices) {
  if (ambient_dim <= 0) throw std::invalid_argument("ambient dimension must be positive");
  if (vertices.empty()) throw std::invalid_argument("empty vertex list");
  for (const RatVec& v : vertices)
    if (static_cast<int>(v.size()) != ambient_dim)
      throw std::invalid_argument("vertex length mismatch");
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j]) throw std::invalid_argument("duplicate vertex");

  Polytope p;
  p.dim_ = ambient_dim;
  p.vertices_ = std::move(vertices);
  p.facets_ = facet_enumeration(ambient_dim, p.vertices_);

  // Every listed vertex must be genuinely extreme: tight on >= dim facets.
  for (const RatVec& v : p.vertices_) {
    int tight = 0;
    for (const Halfspace& h : p.facets_)
      if (dot(h.normal, v) == h.offset) ++tight;
    if (tight < ambient_dim) throw std::invalid_argument("listed point is not a vertex");
  }
  return p;
}

Int polytope_denominator(const Polytope& p) {
  Int l = 1;
  for (const RatVec& v : p.vertices())
    for (const Rational& q : v) l = lcm(l, Int(q.get_den()));
  return l;
}

Polytope scale_and_negate(const Polytope& p, const Int& t) {
  if (t == 0) throw std::invalid_argument("degenerate dilate");
  std::vector<RatVec> verts = p.vertices();
  for (RatVec& v : verts)
    for (Rational& x : v) x *= Rational(t);
  // Facets of the dilate are the transformed facets n.x <= t*b (sign-flipped
  // for t < 0); recomputing from the scaled vertices yields the same set.
  return Polytope::from_vertices(p.dim(), std::move(verts));
}

bool membership(const std::vector<Halfspace>& facets, const RatVec& m, Openness o) {
  for (const Halfspace& h : facets) {
    int c = cmp(dot(h.normal, m), h.offset);
    if (c > 0 || (c == 0 && o == Openness::relatively_open)) return false;
  }
  return true;
}

TangentCone tangent_cone(const Polytope& p, const RatVec& m, Openness o) {
  std::vector<TangentCone::Constraint> tight;
  for (const Halfspace& h : p.facets()) {
    int c = cmp(dot(h.normal, m), h.offset);
    if (c > 0) return TangentCone::make_empty();
    if (c == 0) tight.push_back({h.normal, o == Openness::relatively_open});
  }
  if (tight.empty()) return TangentCone::make_ambient();
  return TangentCone::proper(std::move(tight));
}

Polytope Polytope::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  int d = j.at("dim").get<int>();
  std::vector<RatVec> verts;
  for (const auto& jv : j.at("vertices")) {
    RatVec v;
    for (const auto& coord : jv) v.push_back(rat_parse(coord.get<std::string>()));
    verts.push_back(std::move(v));
  }
  return from_vertices(d, std::move(verts));
}

std::string Polytope::to_json() const {
  nlohmann::json j;
  j["dim"] = dim_;
  nlohmann::json verts = nlohmann::json::array();
  for (const RatVec& v : vertices_) {
    nlohmann::json jv = nlohmann::json::array();
    for (const Rational& q : v) jv.push_back(rat_str(q));
    verts.push_back(jv);
  }
  j["vertices"] = verts;
  return j.dump();
}

}  // namespace coneval
