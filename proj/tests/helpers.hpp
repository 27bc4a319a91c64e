#pragma once

// Shared test utilities and the independent brute-force oracles used to
// freeze expected values. The oracles deliberately avoid the library's hull
// and volume kernels: planar areas come from a supporting-line extreme-point
// filter plus an angular sort and the shoelace formula, spatial volumes from
// exhaustive supporting-plane enumeration plus pyramid sums.

#include <algorithm>
#include <map>
#include <vector>

#include "affdia/polytope.hpp"

namespace affdia::testing {

inline Vec<Rat> rv(std::initializer_list<long long> cs) {
  Vec<Rat> v;
  for (long long c : cs) v.push_back(Rat(c));
  return v;
}

inline std::vector<Vec<Rat>> rpts(std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<Vec<Rat>> out;
  for (const auto& r : rows) out.push_back(rv(r));
  return out;
}

// --- planar area oracle -----------------------------------------------------

// Boundary test: q is on the boundary of conv(pts) iff some line through q
// keeps all points on one side.
inline bool oracle_on_boundary2(const std::vector<Vec<Rat>>& pts, const Vec<Rat>& q) {
  for (const auto& p : pts) {
    if (p == q) continue;
    Vec<Rat> n = {q[1] - p[1], p[0] - q[0]};  // normal of the line through p, q
    bool all_le = true, all_ge = true;
    for (const auto& r : pts) {
      int s = sgn(dot(n, vec_sub(r, q)));
      if (s > 0) all_le = false;
      if (s < 0) all_ge = false;
    }
    if (all_le || all_ge) return true;
  }
  return false;
}

inline Rat oracle_area2(std::vector<Vec<Rat>> pts) {
  pts = [&] {
    std::sort(pts.begin(), pts.end(), lex_less<Rat>);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
  }();
  std::vector<Vec<Rat>> bd;
  for (const auto& q : pts)
    if (oracle_on_boundary2(pts, q)) bd.push_back(q);
  // centroid of boundary points is interior (or on a segment for flat input)
  Vec<Rat> c = {Rat(0), Rat(0)};
  for (const auto& q : bd) c = vec_add(c, q);
  c = vec_scale(Rat(1) / Rat(static_cast<long long>(bd.size())), c);
  auto angle_less = [&](const Vec<Rat>& a, const Vec<Rat>& b) {
    Vec<Rat> da = vec_sub(a, c), db = vec_sub(b, c);
    auto half = [](const Vec<Rat>& v) {
      return (sgn(v[1]) < 0 || (sgn(v[1]) == 0 && sgn(v[0]) < 0)) ? 1 : 0;
    };
    if (half(da) != half(db)) return half(da) < half(db);
    int cr = sgn(cross2(da, db));
    if (cr != 0) return cr > 0;
    return norm_sq(da) < norm_sq(db);
  };
  std::sort(bd.begin(), bd.end(), angle_less);
  Rat two_area = 0;
  for (size_t i = 0; i < bd.size(); ++i)
    two_area += cross2(bd[i], bd[(i + 1) % bd.size()]);
  if (sgn(two_area) < 0) two_area = -two_area;
  return two_area / 2;
}

// Planar mean diameter count by the difference-body formula, computed
// entirely with oracle areas over the pairwise differences.
inline Rat oracle_na_planar(const std::vector<Vec<Rat>>& pts) {
  std::vector<Vec<Rat>> diffs;
  for (const auto& a : pts)
    for (const auto& b : pts) diffs.push_back(vec_sub(a, b));
  return oracle_area2(diffs) / (oracle_area2(pts) * 2);
}

// --- spatial volume oracle ---------------------------------------------------

inline Rat oracle_volume3(std::vector<Vec<Rat>> pts) {
  std::sort(pts.begin(), pts.end(), lex_less<Rat>);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const size_t m = pts.size();
  Vec<Rat> c = {Rat(0), Rat(0), Rat(0)};
  for (const auto& p : pts) c = vec_add(c, p);
  c = vec_scale(Rat(1) / Rat(static_cast<long long>(m)), c);

  std::map<std::pair<Vec<Rat>, Rat>, std::vector<Vec<Rat>>> planes;
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      for (size_t k = j + 1; k < m; ++k) {
        Vec<Rat> n = cross3(vec_sub(pts[j], pts[i]), vec_sub(pts[k], pts[i]));
        if (is_zero_vec(n)) continue;
        Rat h = dot(n, pts[i]);
        bool all_le = true;
        for (const auto& p : pts)
          if (sgn(dot(n, p) - h) > 0) {
            all_le = false;
            break;
          }
        if (!all_le) {
          n = vec_neg(n);
          h = -h;
          all_le = true;
          for (const auto& p : pts)
            if (sgn(dot(n, p) - h) > 0) {
              all_le = false;
              break;
            }
        }
        if (!all_le) continue;
        auto key = std::make_pair(primitive_direction(n), dot(primitive_direction(n), pts[i]));
        auto& members = planes[key];
        for (const auto& p : pts)
          if (dot(key.first, p) == key.second) members.push_back(p);
        std::sort(members.begin(), members.end(), lex_less<Rat>);
        members.erase(std::unique(members.begin(), members.end()), members.end());
      }

  Rat vol = 0;
  for (const auto& [key, members] : planes) {
    const Vec<Rat>& n = key.first;
    // face area from the planar oracle on the projected points; projecting
    // out the dominant normal axis scales areas by |n_axis| / |n|
    int axis = 0;
    for (int d = 1; d < 3; ++d)
      if (abs(n[d]) > abs(n[axis])) axis = d;
    int i = (axis + 1) % 3, j = (axis + 2) % 3;
    std::vector<Vec<Rat>> proj;
    for (const auto& p : members) proj.push_back({p[i], p[j]});
    Rat proj_area = oracle_area2(proj);
    Rat na = n[axis];
    if (sgn(na) < 0) na = -na;
    Rat height_times_norm = key.second - dot(n, c);  // dist(c, plane) * |n|
    vol += proj_area * height_times_norm / (na * 3);
  }
  return vol;
}

}  // namespace affdia::testing
