#pragma once

// Exact 3D convex hulls.
//
// Strategy: scale the rational input to a common integer lattice, run an
// incremental triangulated hull where every orientation test is decided on a
// symbolically perturbed copy of the points (point i is displaced by an
// infinitesimal multiple of (t, t^2, t^3) with t = i+1; four points on the
// moment curve are never coplanar, so the perturbed predicate never returns
// zero and the insertion loop needs no coplanarity cases). Afterwards the
// triangles are grouped by their true supporting plane and each group is
// collapsed to one maximal facet whose polygon is the in-plane 2D hull of the
// group's vertices. The result is fully certified: H-representation
// containment of all input points, strictness for non-incident vertices and
// the Euler relation are checked before returning.

#include <algorithm>
#include <array>
#include <map>
#include <vector>

#include "affdia/hull2d.hpp"
#include "affdia/polytope.hpp"

namespace affdia {

namespace detail3 {

using IVec = std::array<Int, 3>;

inline IVec isub(const IVec& a, const IVec& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

inline Int idet3(const IVec& c0, const IVec& c1, const IVec& c2) {
  return c0[0] * (c1[1] * c2[2] - c1[2] * c2[1]) - c1[0] * (c0[1] * c2[2] - c0[2] * c2[1]) +
         c2[0] * (c0[1] * c1[2] - c0[2] * c1[1]);
}

inline IVec icross(const IVec& a, const IVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

struct Hull3 {
  std::vector<IVec> pts;  // integer-scaled points, deduped, lex-sorted
  std::vector<IVec> mu;   // perturbation directions per index

  int orient_true(int a, int b, int c, int d) const {
    return idet3(isub(pts[b], pts[a]), isub(pts[c], pts[a]), isub(pts[d], pts[a])).sign();
  }

  // Sign of det for the perturbed points; nonzero for distinct indices. The
  // determinant is a cubic polynomial in the perturbation size whose
  // coefficients are evaluated lowest-degree first.
  int orient_pert(int a, int b, int c, int d) const {
    const IVec u[3] = {isub(pts[b], pts[a]), isub(pts[c], pts[a]), isub(pts[d], pts[a])};
    const IVec w[3] = {isub(mu[b], mu[a]), isub(mu[c], mu[a]), isub(mu[d], mu[a])};
    for (int k = 0; k <= 3; ++k) {
      Int coeff = 0;
      for (int mask = 0; mask < 8; ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        coeff += idet3((mask & 1) ? w[0] : u[0], (mask & 2) ? w[1] : u[1], (mask & 4) ? w[2] : u[2]);
      }
      int s = coeff.sign();
      if (s != 0) return s;
    }
    fail(Err::InternalError, "perturbed orientation vanished");
  }

  struct Tri {
    int a, b, c;
    bool alive = true;
  };
  std::vector<Tri> tris;

  void run() {
    const int m = static_cast<int>(pts.size());
    // initial full-dimensional simplex from truly independent points
    int i0 = 0, i1 = 1, i2 = -1, i3 = -1;
    for (int j = 2; j < m && i2 < 0; ++j)
      if (icross(isub(pts[i1], pts[i0]), isub(pts[j], pts[i0])) != IVec{0, 0, 0}) i2 = j;
    require(i2 >= 0, Err::DegenerateInput, "points lie on a line");
    for (int j = 2; j < m && i3 < 0; ++j)
      if (j != i2 && orient_true(i0, i1, i2, j) != 0) i3 = j;
    require(i3 >= 0, Err::DegenerateInput, "points lie in a plane");
    if (orient_pert(i0, i1, i2, i3) > 0) std::swap(i1, i2);
    tris.push_back({i0, i1, i2});
    tris.push_back({i0, i2, i3});
    tris.push_back({i0, i3, i1});
    tris.push_back({i1, i3, i2});

    for (int p = 0; p < m; ++p) {
      if (p == i0 || p == i1 || p == i2 || p == i3) continue;
      insert(p);
    }
  }

  void insert(int p) {
    std::vector<int> visible;
    for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
      if (!tris[t].alive) continue;
      if (orient_pert(tris[t].a, tris[t].b, tris[t].c, p) > 0) visible.push_back(t);
    }
    if (visible.empty()) return;  // p inside the current perturbed hull

    std::vector<std::pair<int, int>> dir_edges;
    for (int t : visible) {
      const Tri& tr = tris[t];
      dir_edges.push_back({tr.a, tr.b});
      dir_edges.push_back({tr.b, tr.c});
      dir_edges.push_back({tr.c, tr.a});
      tris[t].alive = false;
    }
    std::sort(dir_edges.begin(), dir_edges.end());
    for (const auto& [u, v] : dir_edges) {
      if (std::binary_search(dir_edges.begin(), dir_edges.end(), std::make_pair(v, u))) continue;
      tris.push_back({u, v, p});  // horizon edge keeps its dying orientation
    }
  }
};

}  // namespace detail3

template <class R>
Polytope<R> convex_hull_3d(const std::vector<Vec<R>>& points);

// Exact instantiation only: 3D hulls are always computed on rationals.
template <>
inline Polytope<Rat> convex_hull_3d<Rat>(const std::vector<Vec<Rat>>& points) {
  using detail3::IVec;
  std::vector<Vec<Rat>> pts = dedup_points(points);
  require(pts.size() >= 4, Err::DegenerateInput, "fewer than 4 distinct points");

  // common integer scaling
  Int scale = 1;
  for (const auto& v : pts)
    for (const auto& c : v) scale = boost::multiprecision::lcm(scale, denominator(c));
  detail3::Hull3 h;
  h.pts.reserve(pts.size());
  for (const auto& v : pts) {
    IVec iv;
    for (int d = 0; d < 3; ++d) iv[d] = numerator(v[d]) * (scale / denominator(v[d]));
    h.pts.push_back(iv);
  }
  for (size_t i = 0; i < pts.size(); ++i) {
    Int t = Int(i + 1);
    h.mu.push_back({t, t * t, t * t * t});
  }
  h.run();

  // group triangles by true supporting plane
  struct Group {
    std::vector<int> pt_ids;
  };
  std::map<std::pair<std::array<Int, 3>, Int>, Group> groups;
  for (const auto& t : h.tris) {
    if (!t.alive) continue;
    IVec n = detail3::icross(detail3::isub(h.pts[t.b], h.pts[t.a]), detail3::isub(h.pts[t.c], h.pts[t.a]));
    if (n == IVec{0, 0, 0}) continue;  // sliver over truly collinear points
    Int off = n[0] * h.pts[t.a][0] + n[1] * h.pts[t.a][1] + n[2] * h.pts[t.a][2];
    std::vector<Int> nv = {n[0], n[1], n[2]};
    reduce_int_vec(nv, &off);
    auto& g = groups[{{nv[0], nv[1], nv[2]}, off}];
    g.pt_ids.push_back(t.a);
    g.pt_ids.push_back(t.b);
    g.pt_ids.push_back(t.c);
  }

  Polytope<Rat> out;
  out.dim = 3;
  std::vector<int> vert_id(pts.size(), -1);
  std::vector<std::pair<std::vector<int>, std::pair<std::array<Int, 3>, Int>>> facet_cycles;

  for (auto& [key, g] : groups) {
    const auto& n = key.first;
    std::sort(g.pt_ids.begin(), g.pt_ids.end());
    g.pt_ids.erase(std::unique(g.pt_ids.begin(), g.pt_ids.end()), g.pt_ids.end());

    // project out the dominant normal axis, keeping a right-handed pair
    int k = 0;
    for (int d = 1; d < 3; ++d)
      if (abs(n[d]) > abs(n[k])) k = d;
    int i = (k + 1) % 3, j = (k + 2) % 3;

    std::vector<Vec<Rat>> proj;
    for (int id : g.pt_ids) proj.push_back({Rat(h.pts[id][i]), Rat(h.pts[id][j])});
    std::vector<Vec<Rat>> cyc2 = hull2d_cycle(proj);

    // map the projected cycle back to point ids
    std::map<std::pair<Rat, Rat>, int> back;
    for (size_t q = 0; q < proj.size(); ++q) back[{proj[q][0], proj[q][1]}] = g.pt_ids[q];
    std::vector<int> cycle;
    for (const auto& v : cyc2) cycle.push_back(back.at({v[0], v[1]}));
    if (n[k] < 0) std::reverse(cycle.begin(), cycle.end());  // CCW seen from outside

    for (int id : cycle) vert_id[id] = 0;
    facet_cycles.push_back({std::move(cycle), key});
  }

  // final vertex numbering (points are already lex-sorted)
  int next = 0;
  for (size_t i = 0; i < pts.size(); ++i)
    if (vert_id[i] == 0) {
      vert_id[i] = next++;
      out.verts.push_back(pts[i]);
    }

  for (auto& [cycle, key] : facet_cycles) {
    Facet<Rat> f;
    f.normal = {Rat(key.first[0]), Rat(key.first[1]), Rat(key.first[2])};
    f.offset = make_rat(key.second, scale);
    // canonical rotation: start the cycle at its smallest vertex id
    std::vector<int> ids;
    for (int id : cycle) ids.push_back(vert_id[id]);
    size_t lo = std::min_element(ids.begin(), ids.end()) - ids.begin();
    std::rotate(ids.begin(), ids.begin() + lo, ids.end());
    f.verts = std::move(ids);
    out.facets.push_back(std::move(f));
  }
  std::sort(out.facets.begin(), out.facets.end(), [](const Facet<Rat>& a, const Facet<Rat>& b) {
    if (a.normal != b.normal) return lex_less(a.normal, b.normal);
    return a.offset < b.offset;
  });

  // certification
  for (const auto& f : out.facets) {
    std::vector<char> onf(out.verts.size(), 0);
    for (int vi : f.verts) onf[vi] = 1;
    for (size_t q = 0; q < out.verts.size(); ++q) {
      int s = sgn(dot(f.normal, out.verts[q]) - f.offset);
      require(onf[q] ? s == 0 : s < 0, Err::InternalError, "hull facet certification failed");
    }
  }
  for (const auto& v : pts)
    for (const auto& f : out.facets)
      require(sgn(dot(f.normal, v) - f.offset) <= 0, Err::InternalError, "input point escapes hull");
  size_t dir_edges = 0;
  for (const auto& f : out.facets) dir_edges += f.verts.size();
  require(dir_edges % 2 == 0 &&
              out.verts.size() + out.facets.size() == dir_edges / 2 + 2,
          Err::InternalError, "Euler relation violated");
  require(sgn(out.volume()) > 0, Err::InternalError, "non-positive hull volume");
  return out;
}

template <class R>
Polytope<R> convex_hull_3d(const std::vector<Vec<R>>&) {
  fail(Err::NotSupported, "3D hulls are exact-mode only");
}

// Dispatch over the ambient dimension.
template <class R>
Polytope<R> convex_hull(const std::vector<Vec<R>>& points, int dim, double eps = 1e-9) {
  require(!points.empty(), Err::InvalidInput, "no points");
  for (const auto& p : points)
    require(static_cast<int>(p.size()) == dim, Err::DimensionMismatch, "point/dim mismatch");
  if (dim == 2) return convex_hull_2d(points, eps);
  if (dim == 3) return convex_hull_3d<R>(points);
  fail(Err::NotSupported, "hulls only in dim 2 or 3");
}

template <class R>
Polytope<R> reflect(const Polytope<R>& p, double eps = 1e-9) {
  return convex_hull(p.reflected_vertices(), p.dim, eps);
}

template <class R>
Polytope<R> scaled_copy(const Polytope<R>& p, const R& s, double eps = 1e-9) {
  require(ScalarTraits<R>::sign(s, 0.0) != 0, Err::InvalidInput, "zero scale");
  std::vector<Vec<R>> vs;
  for (const auto& v : p.verts) vs.push_back(vec_scale(s, v));
  return convex_hull(vs, p.dim, eps);
}

}  // namespace affdia
