#pragma once

// Vertex/facet representation of full-dimensional convex polytopes.
//
// Conventions (all modules rely on them):
//   - 2D polytopes store their vertices as a CCW cycle starting at the
//     lexicographically smallest vertex; facet i is the edge (i, i+1).
//   - 3D polytopes store vertices in lexicographic order; facets carry their
//     vertex cycle ordered CCW as seen from outside.
//   - Facet normals are unnormalized (exact direction, gcd-reduced when built
//     from integer data); offsets satisfy <n, x> = h on the facet plane and
//     <n, x> < h strictly for all other vertices.

#include <algorithm>
#include <map>
#include <vector>

#include "affdia/errors.hpp"
#include "affdia/linsolve.hpp"
#include "affdia/rational.hpp"
#include "affdia/vec.hpp"

namespace affdia {

template <class R>
struct Facet {
  Vec<R> normal;
  R offset{};
  std::vector<int> verts;  // cycle (3D) / ordered edge pair (2D)
};

template <class R>
struct Face {
  int dim = -1;            // affine dimension of the support set
  std::vector<int> verts;  // sorted vertex indices
  Vec<R> normal;           // the querying direction
};

enum class Location { Inside, Boundary, Outside };

template <class R>
struct BBox {
  Vec<R> lo, hi;
};

template <class R>
struct Polytope {
  int dim = 0;
  std::vector<Vec<R>> verts;
  std::vector<Facet<R>> facets;

  int vertex_count() const { return static_cast<int>(verts.size()); }
  int facet_count() const { return static_cast<int>(facets.size()); }
  bool full_dimensional() const { return !facets.empty(); }

  R support_value(const Vec<R>& u) const {
    require(!verts.empty(), Err::InvalidInput, "empty polytope");
    R best = dot(u, verts[0]);
    for (size_t i = 1; i < verts.size(); ++i) {
      R v = dot(u, verts[i]);
      if (best < v) best = v;
    }
    return best;
  }

  Face<R> support_set(const Vec<R>& u, double eps = 1e-9) const {
    require(!is_zero_vec(u), Err::InvalidInput, "zero direction");
    R best = support_value(u);
    Face<R> f;
    f.normal = u;
    std::vector<Vec<R>> pts;
    for (size_t i = 0; i < verts.size(); ++i) {
      if (ScalarTraits<R>::eq(dot(u, verts[i]), best, eps)) {
        f.verts.push_back(static_cast<int>(i));
        pts.push_back(verts[i]);
      }
    }
    f.dim = affine_rank(pts, eps);
    return f;
  }

  Location locate(const Vec<R>& x, double eps = 1e-9) const {
    require(full_dimensional(), Err::InvalidInput, "H-representation unavailable");
    bool boundary = false;
    for (const auto& f : facets) {
      int s = ScalarTraits<R>::sign(dot(f.normal, x) - f.offset, eps);
      if (s > 0) return Location::Outside;
      if (s == 0) boundary = true;
    }
    return boundary ? Location::Boundary : Location::Inside;
  }

  bool contains(const Vec<R>& x, double eps = 1e-9) const { return locate(x, eps) != Location::Outside; }

  // Exact Lebesgue measure by fan triangulation from the first vertex; every
  // fan simplex must come out with nonnegative oriented volume.
  R volume() const {
    require(full_dimensional(), Err::InvalidInput, "volume of non-full-dimensional polytope");
    if (dim == 2) {
      R two_area{};
      for (size_t i = 1; i + 1 < verts.size(); ++i) {
        R t = orient2(verts[0], verts[i], verts[i + 1]);
        require(ScalarTraits<R>::sign(t, 0.0) >= 0, Err::InternalError, "fan triangle with negative area");
        two_area += t;
      }
      return two_area / ScalarTraits<R>::from_int(2);
    }
    if (dim == 3) {
      const Vec<R>& apex = verts[0];
      R six_vol{};
      for (const auto& f : facets) {
        R part{};
        for (size_t i = 1; i + 1 < f.verts.size(); ++i) {
          part += det3(vec_sub(verts[f.verts[0]], apex), vec_sub(verts[f.verts[i]], apex),
                       vec_sub(verts[f.verts[i + 1]], apex));
        }
        require(ScalarTraits<R>::sign(part, 0.0) >= 0, Err::InternalError, "fan cone with negative volume");
        six_vol += part;
      }
      return six_vol / ScalarTraits<R>::from_int(6);
    }
    fail(Err::NotSupported, "volume only for dim 2 or 3");
  }

  BBox<R> bbox() const {
    BBox<R> b{verts[0], verts[0]};
    for (const auto& v : verts)
      for (int d = 0; d < dim; ++d) {
        if (v[d] < b.lo[d]) b.lo[d] = v[d];
        if (b.hi[d] < v[d]) b.hi[d] = v[d];
      }
    return b;
  }

  Polytope translated(const Vec<R>& t) const {
    Polytope p = *this;
    for (auto& v : p.verts) v = vec_add(v, t);
    for (auto& f : p.facets) f.offset += dot(f.normal, t);
    return p;
  }

  std::vector<Vec<R>> reflected_vertices() const {
    std::vector<Vec<R>> out;
    out.reserve(verts.size());
    for (const auto& v : verts) out.push_back(vec_neg(v));
    return out;
  }

  // Structural invariants: facet vertex sets span dim-1, every vertex lies on
  // at least dim facets, non-incident vertices are strictly below each facet.
  void validate(double eps = 1e-9) const {
    std::vector<int> incident(verts.size(), 0);
    for (const auto& f : facets) {
      std::vector<Vec<R>> pts;
      std::vector<char> onf(verts.size(), 0);
      for (int vi : f.verts) {
        pts.push_back(verts[vi]);
        onf[vi] = 1;
        ++incident[vi];
      }
      require(affine_rank(pts, eps) == dim - 1, Err::InternalError, "facet not (dim-1)-dimensional");
      for (size_t i = 0; i < verts.size(); ++i) {
        int s = ScalarTraits<R>::sign(dot(f.normal, verts[i]) - f.offset, eps);
        if (onf[i])
          require(s == 0, Err::InternalError, "facet vertex off its plane");
        else
          require(s < 0, Err::InternalError, "vertex not strictly below facet");
      }
    }
    for (int c : incident) require(c >= dim, Err::InternalError, "vertex on fewer than dim facets");
  }
};

// Edge adjacency of a 3D polytope recovered from the facet cycles.
template <class R>
struct EdgeRecord {
  int v0, v1;  // v0 < v1
  int f0, f1;  // incident facets
};

template <class R>
std::vector<EdgeRecord<R>> polytope_edges(const Polytope<R>& p) {
  require(p.dim == 3, Err::NotSupported, "edge lattice only for dim 3");
  std::map<std::pair<int, int>, std::pair<int, int>> half;  // directed edge -> (facet, seen)
  std::map<std::pair<int, int>, EdgeRecord<R>> edges;
  for (int fi = 0; fi < p.facet_count(); ++fi) {
    const auto& cyc = p.facets[fi].verts;
    const size_t k = cyc.size();
    for (size_t i = 0; i < k; ++i) {
      int a = cyc[i], b = cyc[(i + 1) % k];
      require(half.insert({{a, b}, {fi, 1}}).second, Err::InternalError, "directed edge repeated");
      auto key = std::minmax(a, b);
      auto it = edges.find({key.first, key.second});
      if (it == edges.end())
        edges[{key.first, key.second}] = {key.first, key.second, fi, -1};
      else
        it->second.f1 = fi;
    }
  }
  std::vector<EdgeRecord<R>> out;
  for (auto& [k, e] : edges) {
    require(e.f1 >= 0, Err::InternalError, "boundary edge with one facet");
    out.push_back(e);
  }
  return out;
}

template <class R>
std::vector<std::vector<int>> vertex_facet_incidence(const Polytope<R>& p) {
  std::vector<std::vector<int>> inc(p.verts.size());
  for (int fi = 0; fi < p.facet_count(); ++fi)
    for (int vi : p.facets[fi].verts) inc[vi].push_back(fi);
  return inc;
}

}  // namespace affdia
