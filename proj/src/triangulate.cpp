#include "coneval/triangulate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace coneval {

namespace {

bool lex_less(const RatVec& a, const RatVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

// Maps points of a k-dimensional affine subset of R^d to coordinates in R^k.
std::vector<RatVec> affine_coords(const std::vector<RatVec>& pts, std::size_t k) {
  const RatVec& p0 = pts[0];
  std::vector<RatVec> basis;  // columns, greedy maximal independent set
  for (std::size_t i = 1; i < pts.size() && basis.size() < k; ++i) {
    RatVec diff(p0.size());
    for (std::size_t j = 0; j < p0.size(); ++j) diff[j] = pts[i][j] - p0[j];
    std::vector<RatVec> trial = basis;
    trial.push_back(diff);
    if (rank(RatMat::from_cols(trial)) == trial.size()) basis = std::move(trial);
  }
  if (basis.size() != k) throw std::invalid_argument("degenerate point set");
  RatMat b = RatMat::from_cols(basis);
  std::vector<RatVec> coords;
  for (const RatVec& q : pts) {
    RatVec rhs(p0.size());
    for (std::size_t j = 0; j < p0.size(); ++j) rhs[j] = q[j] - p0[j];
    auto sol = solve_exact(b, rhs);
    if (!sol) throw std::invalid_argument("point off the affine hull");
    coords.push_back(*sol);
  }
  return coords;
}

// Pulling triangulation with respect to the global lex order on vertices:
// each face is fanned from its lex-smallest vertex, so triangulations of
// shared faces coincide and the cells form a simplicial complex.
// `sub` holds global indices of the k-dimensional face being triangulated.
std::vector<std::vector<std::size_t>> triangulate_rec(const std::vector<RatVec>& all,
                                                      const std::vector<std::size_t>& sub,
                                                      std::size_t k) {
  std::vector<std::vector<std::size_t>> cells;
  if (sub.size() == k + 1) {
    std::vector<std::size_t> cell = sub;
    std::sort(cell.begin(), cell.end());
    return {cell};
  }

  std::vector<RatVec> face_pts;
  for (std::size_t i : sub) face_pts.push_back(all[i]);
  std::vector<RatVec> pts = affine_coords(face_pts, k);

  std::size_t apex = 0;
  for (std::size_t i = 1; i < sub.size(); ++i)
    if (lex_less(all[sub[i]], all[sub[apex]])) apex = i;

  for (const Halfspace& h : facet_enumeration(static_cast<int>(k), pts)) {
    if (dot(h.normal, pts[apex]) == h.offset) continue;  // apex on this facet
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (dot(h.normal, pts[i]) == h.offset) tight.push_back(sub[i]);
    for (const std::vector<std::size_t>& facet_cell : triangulate_rec(all, tight, k - 1)) {
      std::vector<std::size_t> cell{sub[apex]};
      cell.insert(cell.end(), facet_cell.begin(), facet_cell.end());
      std::sort(cell.begin(), cell.end());
      cells.push_back(std::move(cell));
    }
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

std::vector<Halfspace> simplex_facets(const Simplex& s) {
  return facet_enumeration(s.ambient_dim, s.vertices);
}

// Exhaustive vertex enumeration of the intersection of two full-dimensional
// simplices; every vertex of the intersection must be a vertex of both cells
// for the pair to intersect in a common face.
bool common_face_intersection(const Simplex& a, const Simplex& b) {
  const std::size_t d = static_cast<std::size_t>(a.ambient_dim);
  std::vector<Halfspace> hs = simplex_facets(a);
  for (Halfspace& h : simplex_facets(b)) hs.push_back(std::move(h));

  auto is_vertex_of = [](const Simplex& s, const RatVec& x) {
    for (const RatVec& v : s.vertices)
      if (v == x) return true;
    return false;
  };

  std::vector<std::size_t> idx(d);
  for (std::size_t i = 0; i < d; ++i) idx[i] = i;
  auto advance = [&](bool& done) {
    std::size_t i = d;
    while (i-- > 0) {
      if (idx[i] + (d - i) < hs.size()) {
        ++idx[i];
        for (std::size_t j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
        return;
      }
    }
    done = true;
  };

  bool done = hs.size() < d;
  while (!done) {
    RatMat m(d, d);
    RatVec rhs(d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) m.at(i, j) = Rational(hs[idx[i]].normal[j]);
      rhs[i] = hs[idx[i]].offset;
    }
    if (rank(m) == d) {
      RatVec x = *solve_exact(m, rhs);
      bool feasible = true;
      for (const Halfspace& h : hs)
        if (dot(h.normal, x) > h.offset) {
          feasible = false;
          break;
        }
      if (feasible && (!is_vertex_of(a, x) || !is_vertex_of(b, x))) return false;
    }
    advance(done);
  }
  return true;
}

}  // namespace

std::vector<Simplex> triangulate_polytope(const Polytope& p) {
  std::vector<Simplex> out;
  std::vector<std::size_t> all_idx(p.vertices().size());
  for (std::size_t i = 0; i < all_idx.size(); ++i) all_idx[i] = i;
  for (const std::vector<std::size_t>& cell :
       triangulate_rec(p.vertices(), all_idx, static_cast<std::size_t>(p.dim()))) {
    Simplex s;
    s.ambient_dim = p.dim();
    for (std::size_t i : cell) s.vertices.push_back(p.vertices()[i]);
    std::sort(s.vertices.begin(), s.vertices.end(), lex_less);
    out.push_back(std::move(s));
  }
  return out;
}

FaceComplex build_face_complex(const std::vector<Simplex>& cells) {
  if (cells.empty()) throw std::invalid_argument("no cells");
  const int d = cells[0].dim();
  const int ambient = cells[0].ambient_dim;
  for (const Simplex& c : cells) {
    if (c.dim() != d || c.ambient_dim != ambient)
      throw std::invalid_argument("improper triangulation");
    RatMat diffs(static_cast<std::size_t>(c.dim()), static_cast<std::size_t>(ambient));
    for (int i = 1; i <= c.dim(); ++i)
      for (int j = 0; j < ambient; ++j)
        diffs.at(i - 1, j) = c.vertices[i][j] - c.vertices[0][j];
    if (rank(diffs) != static_cast<std::size_t>(c.dim()))
      throw std::invalid_argument("degenerate cell");
  }
  if (d == ambient) {
    for (std::size_t i = 0; i < cells.size(); ++i)
      for (std::size_t j = i + 1; j < cells.size(); ++j)
        if (!common_face_intersection(cells[i], cells[j]))
          throw std::invalid_argument("improper triangulation");
  }

  // Global vertex ids; faces of a simplex are its non-empty vertex subsets.
  std::map<RatVec, std::size_t, decltype(&lex_less)> vid(&lex_less);
  std::vector<RatVec> verts;
  auto id_of = [&](const RatVec& v) {
    auto it = vid.find(v);
    if (it != vid.end()) return it->second;
    std::size_t id = verts.size();
    vid.emplace(v, id);
    verts.push_back(v);
    return id;
  };

  std::set<std::vector<std::size_t>> face_set;
  for (const Simplex& c : cells) {
    std::vector<std::size_t> ids;
    for (const RatVec& v : c.vertices) ids.push_back(id_of(v));
    std::sort(ids.begin(), ids.end());
    const std::size_t n = ids.size();
    for (std::size_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<std::size_t> face;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) face.push_back(ids[i]);
      face_set.insert(std::move(face));
    }
  }

  std::vector<std::vector<std::size_t>> faces(face_set.begin(), face_set.end());
  std::sort(faces.begin(), faces.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() > y.size();
    return x < y;
  });

  auto contains = [](const std::vector<std::size_t>& big, const std::vector<std::size_t>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };

  std::vector<long long> coeff(faces.size());
  for (std::size_t f = 0; f < faces.size(); ++f) {
    long long c = 1;
    for (std::size_t g = 0; g < f; ++g)
      if (faces[g].size() > faces[f].size() && contains(faces[g], faces[f])) c -= coeff[g];
    coeff[f] = c;
  }

  FaceComplex fc;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    Simplex s;
    s.ambient_dim = ambient;
    for (std::size_t id : faces[f]) s.vertices.push_back(verts[id]);
    fc.faces.push_back({std::move(s), coeff[f]});
  }
  return fc;
}

}  // namespace coneval
