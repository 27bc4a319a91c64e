#pragma once

// Planar convex hulls by monotone chain with exact (or eps-signed)
// orientation tests. Output is the minimal vertex set as a CCW cycle.

#include <algorithm>
#include <vector>

#include "affdia/polytope.hpp"

namespace affdia {

template <class R>
std::vector<Vec<R>> dedup_points(std::vector<Vec<R>> pts) {
  std::sort(pts.begin(), pts.end(), lex_less<R>);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// CCW cycle of extreme points, starting at the lexicographic minimum.
// Collinear interior points are removed.
template <class R>
std::vector<Vec<R>> hull2d_cycle(const std::vector<Vec<R>>& points, double eps = 1e-9) {
  std::vector<Vec<R>> pts = dedup_points(points);
  require(pts.size() >= 3, Err::DegenerateInput, "fewer than 3 distinct points");
  require(affine_rank(pts, eps) == 2, Err::DegenerateInput, "points lie on a line");

  auto build = [&](auto begin, auto end) {
    std::vector<Vec<R>> chain;
    for (auto it = begin; it != end; ++it) {
      while (chain.size() >= 2 &&
             ScalarTraits<R>::sign(orient2(chain[chain.size() - 2], chain.back(), *it), eps) <= 0)
        chain.pop_back();
      chain.push_back(*it);
    }
    return chain;
  };
  std::vector<Vec<R>> lower = build(pts.begin(), pts.end());
  std::vector<Vec<R>> upper = build(pts.rbegin(), pts.rend());
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  require(lower.size() >= 3, Err::DegenerateInput, "degenerate hull");
  return lower;
}

template <class R>
Polytope<R> polygon_from_ccw_cycle(std::vector<Vec<R>> cycle) {
  // canonical start: lexicographic minimum
  size_t lo = 0;
  for (size_t i = 1; i < cycle.size(); ++i)
    if (lex_less(cycle[i], cycle[lo])) lo = i;
  std::rotate(cycle.begin(), cycle.begin() + lo, cycle.end());

  Polytope<R> p;
  p.dim = 2;
  p.verts = std::move(cycle);
  const int m = p.vertex_count();
  for (int i = 0; i < m; ++i) {
    int j = (i + 1) % m;
    Vec<R> d = vec_sub(p.verts[j], p.verts[i]);
    Facet<R> f;
    f.normal = rot_cw(d);
    f.offset = dot(f.normal, p.verts[i]);
    f.verts = {i, j};
    p.facets.push_back(std::move(f));
  }
  return p;
}

template <class R>
Polytope<R> convex_hull_2d(const std::vector<Vec<R>>& points, double eps = 1e-9) {
  return polygon_from_ccw_cycle(hull2d_cycle(points, eps));
}

// Perimeter as a double (edge lengths are generally irrational).
template <class R>
double polygon_perimeter(const Polytope<R>& p) {
  double s = 0;
  const int m = p.vertex_count();
  for (int i = 0; i < m; ++i) {
    Vec<double> d = vec_to_double(vec_sub(p.verts[(i + 1) % m], p.verts[i]));
    s += std::sqrt(d[0] * d[0] + d[1] * d[1]);
  }
  return s;
}

// Area of the intersection of two convex polygons (Sutherland-Hodgman clip).
template <class R>
R convex_intersection_area(const Polytope<R>& a, const Polytope<R>& b, double eps = 1e-9) {
  require(a.dim == 2 && b.dim == 2, Err::NotSupported, "clip is planar only");
  std::vector<Vec<R>> poly = a.verts;
  for (const auto& f : b.facets) {
    if (poly.empty()) break;
    std::vector<Vec<R>> next;
    const size_t k = poly.size();
    for (size_t i = 0; i < k; ++i) {
      const Vec<R>& cur = poly[i];
      const Vec<R>& nxt = poly[(i + 1) % k];
      R dc = f.offset - dot(f.normal, cur);
      R dn = f.offset - dot(f.normal, nxt);
      int sc = ScalarTraits<R>::sign(dc, eps);
      int sn = ScalarTraits<R>::sign(dn, eps);
      if (sc >= 0) next.push_back(cur);
      if ((sc > 0 && sn < 0) || (sc < 0 && sn > 0)) {
        R t = dc / (dc - dn);
        next.push_back(vec_add(cur, vec_scale(t, vec_sub(nxt, cur))));
      }
    }
    poly = std::move(next);
  }
  if (poly.size() < 3) return R{};
  R two_area{};
  for (size_t i = 1; i + 1 < poly.size(); ++i) two_area += orient2(poly[0], poly[i], poly[i + 1]);
  if (ScalarTraits<R>::sign(two_area, 0.0) < 0) two_area = -two_area;
  return two_area / ScalarTraits<R>::from_int(2);
}

}  // namespace affdia
