#pragma once

// Distance, projection and normals measured by a convex gauge body B with the
// origin in its interior.
//
// d(K,B,x) = min{ r >= 0 : x in K + rB } is computed as a single linear
// program through the substitution gamma_j = r * beta_j: writing the touching
// point as p = sum_i alpha_i k_i over the vertices of K and the inflation as
// r * sum_j beta_j b_j over the vertices of B with both weight vectors
// stochastic, the bilinear constraint x = p + r * (sum beta b) becomes
//   x = sum alpha_i k_i + sum gamma_j b_j,  sum alpha = 1,  alpha, gamma >= 0,
// and r = sum gamma_j is the linear objective. Every representation of
// x in K + rB yields a feasible point of value r and conversely, so the
// optimum is exactly the gauge distance.
//
// When K and B are in strongly general relative position the touching pair
// (p, u) is unique; non-uniqueness is detected exactly by optimizing each
// coordinate of p over the optimal face of the program.

#include <array>
#include <cmath>
#include <vector>

#include "affdia/diameters.hpp"
#include "affdia/lp.hpp"
#include "affdia/position.hpp"
#include "affdia/rng.hpp"

namespace affdia {

template <class R>
struct GaugeResult {
  R d{};
  Vec<R> p;  // B-projection of x onto bd K  (x itself when d = 0)
  Vec<R> u;  // B-normal with x = p + d u    (zero vector when d = 0)
};

template <class R>
GaugeResult<R> gauge_distance(const Polytope<R>& k, const Polytope<R>& b, const Vec<R>& x,
                              bool check_unique = true, double eps = 1e-9) {
  require(k.dim == b.dim, Err::DimensionMismatch, "body and gauge in different dimensions");
  const int dim = k.dim;
  Vec<R> origin(dim, R{});
  require(b.locate(origin, eps) == Location::Inside, Err::InvalidInput,
          "gauge body must contain the origin in its interior");

  const size_t nk = k.verts.size(), nb = b.verts.size();
  std::vector<std::vector<R>> a(dim + 1, std::vector<R>(nk + nb, R{}));
  std::vector<R> rhs(dim + 1);
  for (int d = 0; d < dim; ++d) {
    for (size_t i = 0; i < nk; ++i) a[d][i] = k.verts[i][d];
    for (size_t j = 0; j < nb; ++j) a[d][nk + j] = b.verts[j][d];
    rhs[d] = x[d];
  }
  for (size_t i = 0; i < nk; ++i) a[dim][i] = R{1};
  rhs[dim] = R{1};
  std::vector<R> c(nk + nb, R{});
  for (size_t j = 0; j < nb; ++j) c[nk + j] = R{1};

  LpSolution<R> sol = solve_lp(a, rhs, c, eps);
  require(sol.status == LpStatus::Optimal, Err::InternalError,
          "gauge program must be feasible and bounded");

  GaugeResult<R> res;
  res.d = sol.value;
  res.p.assign(dim, R{});
  for (size_t i = 0; i < nk; ++i)
    for (int d = 0; d < dim; ++d) res.p[d] += sol.x[i] * k.verts[i][d];
  res.u.assign(dim, R{});
  if (ScalarTraits<R>::sign(res.d, eps) > 0) {
    for (int d = 0; d < dim; ++d) res.u[d] = (x[d] - res.p[d]) / res.d;
    if constexpr (ScalarTraits<R>::exact) {
      require(b.locate(res.u) == Location::Boundary, Err::InternalError, "B-normal off bd B");
      require(k.locate(res.p) == Location::Boundary, Err::InternalError, "B-projection off bd K");
    }
  } else {
    res.p = x;
  }

  if (check_unique && ScalarTraits<R>::sign(res.d, eps) > 0) {
    // pin the optimal value and stretch each coordinate of p over the
    // optimal face; any slack means the touching point is not unique
    std::vector<std::vector<R>> a2 = a;
    a2.push_back(c);
    std::vector<R> rhs2 = rhs;
    rhs2.push_back(res.d);
    for (int t = 0; t < dim; ++t) {
      R lo{}, hi{};
      for (int dir = 0; dir < 2; ++dir) {
        std::vector<R> obj(nk + nb, R{});
        for (size_t i = 0; i < nk; ++i) obj[i] = dir ? -k.verts[i][t] : k.verts[i][t];
        LpSolution<R> s2 = solve_lp(a2, rhs2, obj, eps);
        require(s2.status == LpStatus::Optimal, Err::InternalError, "uniqueness probe failed");
        (dir ? hi : lo) = dir ? -s2.value : s2.value;
      }
      if (!ScalarTraits<R>::eq(lo, hi, eps))
        fail(Err::GaugeDegenerate, "B-projection not unique; bodies not in strongly general "
                                   "relative position at this direction");
    }
  }
  return res;
}

struct LipschitzBound {
  double value = 0;  // 1/sin(alpha0)
  Rat value_sq;      // exact square, used for exact comparisons
};

// Smallest angle alpha0 between a boundary vector of B and a supporting line
// at it. For polygons the minimum is attained at a vertex against one of its
// incident edges: along an edge the supporting line is fixed, so sin(alpha) =
// dist(o, line)/|v| is minimized at the endpoint of larger norm, and at a
// vertex the angle to a rotating support line is minimized at an edge of the
// pencil. Hence 1/sin(alpha0)^2 = max over incident (v, e) of
// |v|^2 |n_e|^2 / h_e^2.
inline LipschitzBound lipschitz_bound(const Polytope<Rat>& b) {
  require(b.dim == 2, Err::NotSupported, "gauge bound is planar");
  Vec<Rat> origin(2, Rat(0));
  require(b.locate(origin) == Location::Inside, Err::InvalidInput,
          "gauge body must contain the origin in its interior");
  Rat best = 0;
  const int m = b.vertex_count();
  for (int v = 0; v < m; ++v) {
    for (int fi : {(v + m - 1) % m, v}) {
      const Facet<Rat>& f = b.facets[fi];
      Rat cand = norm_sq(b.verts[v]) * norm_sq(f.normal) / (f.offset * f.offset);
      if (best < cand) best = cand;
    }
  }
  LipschitzBound lb;
  lb.value_sq = best;
  lb.value = std::sqrt(to_double(best));
  return lb;
}

struct ProbeReport {
  double max_ratio = 0;
  Vec<double> arg_x, arg_y;
  long long pairs = 0;
};

template <class R>
Polytope<double> to_double_polytope(const Polytope<R>& p) {
  Polytope<double> q;
  q.dim = p.dim;
  for (const auto& v : p.verts) q.verts.push_back(vec_to_double(v));
  for (const auto& f : p.facets)
    q.facets.push_back({vec_to_double(f.normal), ScalarTraits<R>::dbl(f.offset), f.verts});
  return q;
}

// Empirical Lipschitz quotient of the B-projection over seeded sample pairs
// drawn from a box around K (interior points of K rejected). Runs on the
// float path; sampling tolerates the gauge LP's eps.
inline ProbeReport lipschitz_probe(const Polytope<Rat>& k_in, const Polytope<Rat>& b_in,
                                   long long sample_pairs, uint64_t seed, double eps = 1e-9) {
  Polytope<double> k = to_double_polytope(k_in);
  Polytope<double> b = to_double_polytope(b_in);
  BBox<Rat> bb = k_in.bbox();
  Vec<double> lo = vec_to_double(bb.lo), hi = vec_to_double(bb.hi);
  const int dim = k.dim;
  std::vector<double> clo(dim), chi(dim);
  for (int d = 0; d < dim; ++d) {  // box of twice the extent around the body
    double c = (lo[d] + hi[d]) / 2, e = (hi[d] - lo[d]);
    clo[d] = c - e;
    chi[d] = c + e;
  }

  ProbeReport rep;
  rep.pairs = sample_pairs;
  constexpr long long kChunk = 1024;
  for (long long chunk = 0; chunk * kChunk < sample_pairs; ++chunk) {
    Rng rng(seed, static_cast<uint64_t>(chunk));
    const long long in_chunk = std::min(kChunk, sample_pairs - chunk * kChunk);
    for (long long s = 0; s < in_chunk; ++s) {
      Vec<double> pts[2];
      for (auto& pt : pts) {
        do {
          pt.assign(dim, 0.0);
          for (int d = 0; d < dim; ++d) pt[d] = rng.uniform(clo[d], chi[d]);
        } while (k.locate(pt, eps) != Location::Outside);
      }
      double dxy = 0;
      for (int d = 0; d < dim; ++d) dxy += (pts[0][d] - pts[1][d]) * (pts[0][d] - pts[1][d]);
      if (dxy < 1e-16) continue;
      GaugeResult<double> g0 = gauge_distance(k, b, pts[0], false, eps);
      GaugeResult<double> g1 = gauge_distance(k, b, pts[1], false, eps);
      double dpp = 0;
      for (int d = 0; d < dim; ++d) dpp += (g0.p[d] - g1.p[d]) * (g0.p[d] - g1.p[d]);
      double ratio = std::sqrt(dpp / dxy);
      if (ratio > rep.max_ratio) {
        rep.max_ratio = ratio;
        rep.arg_x = pts[0];
        rep.arg_y = pts[1];
      }
    }
  }
  return rep;
}

enum class PieceKind { EdgeOfK, EdgeOfB };

// Maximal piece of the B-normal bundle of a polygon pair: on each edge of
// K+B either the K-part moves along an edge of K (generalized curvature 0)
// or the B-part moves along an edge of B (generalized curvature infinite).
struct BundlePiece {
  PieceKind kind = PieceKind::EdgeOfK;
  Face<Rat> k_face, b_face;
  Vec<Rat> normal;  // outward normal of the K+B edge
  Rat length_sq;    // squared H^1 length of the piece
  double length = 0;
  std::pair<Vec<Rat>, Vec<Rat>> start;  // (x, b) pair at the start
  std::pair<Vec<Rat>, Vec<Rat>> end;
};

inline std::vector<BundlePiece> normal_bundle(const Polytope<Rat>& k, const Polytope<Rat>& b) {
  require(k.dim == 2 && b.dim == 2, Err::NotSupported, "bundle is planar");
  PositionReport rep = strongly_general_relative_position(k, b);
  if (!rep.holds) throw PositionError(Err::NotStronglyGeneralPosition, rep);

  Polytope<Rat> s = minkowski_sum(k, b);
  std::vector<BundlePiece> pieces;
  const int m = s.vertex_count();
  for (int i = 0; i < m; ++i) {
    const Facet<Rat>& f = s.facets[i];
    BundlePiece pc;
    pc.normal = f.normal;
    pc.k_face = k.support_set(f.normal);
    pc.b_face = b.support_set(f.normal);
    require(pc.k_face.dim + pc.b_face.dim == 1, Err::InternalError, "sum edge with wrong face split");
    pc.kind = pc.k_face.dim == 1 ? PieceKind::EdgeOfK : PieceKind::EdgeOfB;
    const Vec<Rat>& s0 = s.verts[i];
    const Vec<Rat>& s1 = s.verts[(i + 1) % m];
    if (pc.kind == PieceKind::EdgeOfK) {
      const Vec<Rat>& bv = b.verts[pc.b_face.verts[0]];
      pc.start = {vec_sub(s0, bv), bv};
      pc.end = {vec_sub(s1, bv), bv};
    } else {
      const Vec<Rat>& kv = k.verts[pc.k_face.verts[0]];
      pc.start = {kv, vec_sub(s0, kv)};
      pc.end = {kv, vec_sub(s1, kv)};
    }
    pc.length_sq = norm_sq(vec_sub(s1, s0));
    pc.length = std::sqrt(to_double(pc.length_sq));
    pieces.push_back(std::move(pc));
  }
  for (size_t i = 0; i < pieces.size(); ++i) {
    const auto& cur = pieces[i];
    const auto& nxt = pieces[(i + 1) % pieces.size()];
    require(cur.end.first == nxt.start.first && cur.end.second == nxt.start.second,
            Err::InternalError, "bundle pieces do not close up");
  }
  return pieces;
}

// Half-open arc [from, to) on the circle of directions, counterclockwise.
struct Arc {
  Vec<Rat> from, to;
};

namespace detail_arc {

// Strict CCW order of directions starting at the positive x-axis.
inline int dir_cmp(const Vec<Rat>& a, const Vec<Rat>& b) {
  auto half = [](const Vec<Rat>& v) { return (sgn(v[1]) < 0 || (sgn(v[1]) == 0 && sgn(v[0]) < 0)) ? 1 : 0; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb ? -1 : 1;
  return -sgn(cross2(a, b));  // cross > 0: a strictly before b
}

inline bool in_arc(const Vec<Rat>& u, const Arc& arc) {
  int fa = dir_cmp(arc.from, u);
  int fb = dir_cmp(u, arc.to);
  int wrap = dir_cmp(arc.from, arc.to);
  if (wrap < 0) return fa <= 0 && fb < 0;  // from <= u < to
  return fa <= 0 || fb < 0;                // arc passes the +x axis
}

}  // namespace detail_arc

inline std::vector<Arc> quadrant_arcs() {
  Vec<Rat> e1 = {Rat(1), Rat(0)}, e2 = {Rat(0), Rat(1)};
  Vec<Rat> m1 = {Rat(-1), Rat(0)}, m2 = {Rat(0), Rat(-1)};
  return {{e1, e2}, {e2, m1}, {m1, m2}, {m2, e1}};
}

inline void validate_arc_partition(const std::vector<Arc>& arcs) {
  require(!arcs.empty(), Err::InvalidInput, "empty arc set");
  for (size_t i = 0; i < arcs.size(); ++i) {
    const auto& nxt = arcs[(i + 1) % arcs.size()];
    require(canonical_axis(arcs[i].to).first == canonical_axis(nxt.from).first &&
                sgn(dot(arcs[i].to, nxt.from)) > 0,
            Err::InvalidInput, "arcs do not concatenate into a partition");
  }
  if (arcs.size() == 1) return;  // single half-open arc covering the circle
  int descents = 0;
  for (size_t i = 0; i < arcs.size(); ++i) {
    int c = detail_arc::dir_cmp(arcs[i].from, arcs[(i + 1) % arcs.size()].from);
    require(c != 0, Err::InvalidInput, "duplicate arc boundary");
    if (c > 0) ++descents;
  }
  require(descents == 1, Err::InvalidInput, "arc boundaries not in CCW order");
}

// An edge selected into a direction bin: primitive normal plus squared
// length. Two equal multisets of these records have equal total length.
struct EdgeMass {
  Vec<Rat> axis;
  Rat length_sq;
  bool operator==(const EdgeMass&) const = default;
  bool operator<(const EdgeMass& o) const {
    if (axis != o.axis) return lex_less(axis, o.axis);
    return length_sq < o.length_sq;
  }
};

struct MeasureReport {
  std::vector<double> k_bundle, k_direct, b_bundle, b_direct;  // per-arc masses
  double k_total = 0, b_total = 0;
};

// First-order length measures of K and B evaluated two ways on a partition
// of the direction circle: integrated over the normal bundle (the curvature
// weight keeps exactly the pieces whose moving part belongs to the measured
// body) and directly from the edge normals. Equality per arc is established
// exactly: both sides must select the same multiset of edges.
inline MeasureReport length_measures(const Polytope<Rat>& k, const Polytope<Rat>& b,
                                     const std::vector<Arc>& arcs) {
  validate_arc_partition(arcs);
  std::vector<BundlePiece> bundle = normal_bundle(k, b);
  MeasureReport rep;
  rep.k_bundle.assign(arcs.size(), 0);
  rep.k_direct.assign(arcs.size(), 0);
  rep.b_bundle.assign(arcs.size(), 0);
  rep.b_direct.assign(arcs.size(), 0);

  auto direct_edges = [](const Polytope<Rat>& poly) {
    std::vector<std::pair<Vec<Rat>, EdgeMass>> out;  // (normal, record)
    for (const auto& f : poly.facets) {
      Vec<Rat> d = vec_sub(poly.verts[f.verts[1]], poly.verts[f.verts[0]]);
      out.push_back({f.normal, {primitive_direction(f.normal), norm_sq(d)}});
    }
    return out;
  };

  for (size_t ai = 0; ai < arcs.size(); ++ai) {
    std::vector<EdgeMass> kb, kd, bb, bd;
    for (const auto& pc : bundle) {
      if (!detail_arc::in_arc(pc.normal, arcs[ai])) continue;
      EdgeMass em{primitive_direction(pc.normal), pc.length_sq};
      if (pc.kind == PieceKind::EdgeOfK) {
        kb.push_back(em);
        rep.k_bundle[ai] += pc.length;
      } else {
        bb.push_back(em);
        rep.b_bundle[ai] += pc.length;
      }
    }
    for (const auto& [normal, em] : direct_edges(k))
      if (detail_arc::in_arc(normal, arcs[ai])) {
        kd.push_back(em);
        rep.k_direct[ai] += std::sqrt(to_double(em.length_sq));
      }
    for (const auto& [normal, em] : direct_edges(b))
      if (detail_arc::in_arc(normal, arcs[ai])) {
        bd.push_back(em);
        rep.b_direct[ai] += std::sqrt(to_double(em.length_sq));
      }
    std::sort(kb.begin(), kb.end());
    std::sort(kd.begin(), kd.end());
    std::sort(bb.begin(), bb.end());
    std::sort(bd.begin(), bd.end());
    require(kb == kd, Err::MeasureMismatch, "length measure of K differs on an arc");
    require(bb == bd, Err::MeasureMismatch, "length measure of B differs on an arc");
  }
  for (size_t ai = 0; ai < arcs.size(); ++ai) {
    rep.k_total += rep.k_bundle[ai];
    rep.b_total += rep.b_bundle[ai];
  }
  return rep;
}

struct MixedVolumeIdentity {
  Rat v_dk_k;     // V(DK, K)
  Rat v_dk_negk;  // V(DK, -K)
  Rat v2_dk;      // V_2(DK)
  bool ok = false;
};

// V(DK,K) + V(DK,-K) = V_2(DK), evaluated from the normal bundle of (K,-K):
// each mixed volume is half the sum over the corresponding bundle pieces of
// the DK support value at the edge normal scaled to the edge length (the
// rotated edge vector has exactly that norm, so no square roots appear).
inline MixedVolumeIdentity width_identity_check(const Polytope<Rat>& k) {
  MixedVolumeIdentity rep;
  Polytope<Rat> nk = reflect(k);
  std::vector<BundlePiece> bundle = normal_bundle(k, nk);
  Polytope<Rat> dk = minkowski_sum(k, nk);

  auto scaled_normal = [](const Polytope<Rat>& poly, const Face<Rat>& edge, const Vec<Rat>& outward) {
    Vec<Rat> d = vec_sub(poly.verts[edge.verts[1]], poly.verts[edge.verts[0]]);
    Vec<Rat> n = rot_cw(d);
    if (sgn(dot(n, outward)) < 0) n = vec_neg(n);
    return n;
  };

  rep.v_dk_k = 0;
  rep.v_dk_negk = 0;
  for (const auto& pc : bundle) {
    if (pc.kind == PieceKind::EdgeOfK)
      rep.v_dk_k += dk.support_value(scaled_normal(k, pc.k_face, pc.normal));
    else
      rep.v_dk_negk += dk.support_value(scaled_normal(nk, pc.b_face, pc.normal));
  }
  rep.v_dk_k /= 2;
  rep.v_dk_negk /= 2;
  rep.v2_dk = dk.volume();
  rep.ok = (rep.v_dk_k + rep.v_dk_negk == rep.v2_dk);
  return rep;
}

struct PlanarBoundReport {
  Rat na;
  Rat area_ratio;  // V_2(DK) / (2 V_2(K))
  bool lower_ok = false, upper_ok = false;
  bool is_triangle = false, triangle_iff_ok = false;
};

// 1 <= mean <= 3 for polygons in general relative position, the mean equals
// the difference-body area ratio, and the value 3 characterizes triangles.
inline PlanarBoundReport planar_bound_check(const Polytope<Rat>& k) {
  require(k.dim == 2, Err::NotSupported, "planar check");
  PlanarBoundReport rep;
  DiameterCount dc = na_exact(k);
  rep.na = dc.value;
  rep.area_ratio = difference_body(k).volume() / (k.volume() * 2);
  require(rep.na == rep.area_ratio, Err::FormulaMismatch,
          "mean count differs from difference-body area ratio");
  rep.lower_ok = rep.na >= 1;
  rep.upper_ok = rep.na <= 3;
  rep.is_triangle = k.vertex_count() == 3;
  rep.triangle_iff_ok = (rep.na == 3) == rep.is_triangle;
  require(rep.lower_ok && rep.upper_ok, Err::BoundViolated, "planar mean-count bound violated");
  require(rep.triangle_iff_ok, Err::BoundViolated, "value-3 triangle characterization violated");
  return rep;
}

}  // namespace affdia
