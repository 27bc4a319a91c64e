#pragma once

// A 3D body/gauge pair in strongly general relative position whose gauge
// projection fails every Lipschitz bound.
//
// Construction: on the curve (1/n, 1/n^2) two interleaved zig-zags are built
// from the points x_n = (1/n, 1/n^2, 0) and y_n = (1/n, 1/n^2, 1/n),
//   S_n = [x_{n+1}, y_n] (n odd),  [x_n, y_{n+1}] (n even),
//   T_n = [x_n, y_{n+1}] (n odd),  [x_{n+1}, y_n] (n even),
// truncated at depth N. K is the hull of the S-segments plus the anchors
// (0,1,1), (0,1,-1); B is the hull of the T-segments.
//
// For odd n the four points x_n, y_n, x_{n+1}, y_{n+1} are coplanar; their
// plane H_n supports K exactly in S_n and B (reflected and translated)
// exactly in T_n, provided every other generator lies strictly on the origin
// side of H_n. This separation is re-verified for each built instance, so
// the truncation provably leaves the probed geometry intact. Under it, for
// z near z_0 = x_n + y_{n+1} the set (-B + z) meets K in a single point q(z)
// at gauge distance exactly 1, and
//   z_1 = x_{n+1} + y_{n+1}            gives q(z_1) = x_{n+1},
//   z_2 = z_0 + lambda (x_n - x_{n+1}) gives q(z_2) = y_{n+1} + lambda (x_n - x_{n+1})
// for suitable lambda in (0,1). The projections are 1/(n+1) apart while the
// arguments are only O(1/(n+1)^2) apart, so the quotient exceeds
// (n+1)/(2 sqrt(13)) and grows without bound.
//
// The gauge body is recentred: with c the vertex centroid of B and o interior
// to B - c, the nesting of r(B - c) in s(B - c) for r < s gives
// d(K, B - c, z - c) = 1 and p(K, B - c, z - c) = q(z) whenever
// (-B + z) meets K in the single point q(z) at inflation 1; the probe
// therefore evaluates the recentred gauge at the shifted arguments and all
// distance quotients are unchanged.

#include <vector>

#include "affdia/gauge.hpp"
#include "affdia/position.hpp"

namespace affdia {

struct CounterexampleInstance {
  int depth = 0;
  Polytope<Rat> body;           // K
  Polytope<Rat> gauge;          // B recentred so that o lies in its interior
  Vec<Rat> gauge_shift;         // c with  B_original = gauge + c
  std::vector<Vec<Rat>> xs, ys; // generators, index n stored at position n (1-based)
};

namespace detail_cex {

inline Vec<Rat> xpoint(int n) { return {make_rat(1, n), make_rat(1, Int(n) * n), Rat(0)}; }
inline Vec<Rat> ypoint(int n) { return {make_rat(1, n), make_rat(1, Int(n) * n), make_rat(1, n)}; }

inline std::pair<Vec<Rat>, Vec<Rat>> segment_s(int n) {
  return n % 2 ? std::pair{xpoint(n + 1), ypoint(n)} : std::pair{xpoint(n), ypoint(n + 1)};
}
inline std::pair<Vec<Rat>, Vec<Rat>> segment_t(int n) {
  return n % 2 ? std::pair{xpoint(n), ypoint(n + 1)} : std::pair{xpoint(n + 1), ypoint(n)};
}

// Plane through x_n, y_n, x_{n+1}, y_{n+1}, oriented away from the origin.
struct SupportPlane {
  Vec<Rat> normal;
  Rat offset;
};

inline SupportPlane h_plane(int n) {
  Vec<Rat> a = xpoint(n), b = xpoint(n + 1);
  Vec<Rat> n3 = cross3(vec_sub(b, a), Vec<Rat>{Rat(0), Rat(0), Rat(1)});
  Rat off = dot(n3, a);
  if (sgn(off) < 0) {
    n3 = vec_neg(n3);
    off = -off;
  }
  require(sgn(off) > 0, Err::InternalError, "separating plane through the origin");
  require(dot(n3, ypoint(n)) == off && dot(n3, ypoint(n + 1)) == off, Err::InternalError,
          "generator quadruple not coplanar");
  return {n3, off};
}

}  // namespace detail_cex

// Verifies that H_n supports the body exactly in the segment endpoints
// `on_plane`; every other vertex must lie strictly on the origin side.
inline void verify_separation(const Polytope<Rat>& poly, const detail_cex::SupportPlane& h,
                              const std::vector<Vec<Rat>>& on_plane) {
  for (const auto& v : poly.verts) {
    Rat val = dot(h.normal, v);
    bool expected_on = false;
    for (const auto& q : on_plane)
      if (q == v) expected_on = true;
    if (expected_on)
      require(val == h.offset, Err::PositionCheckFailed, "segment endpoint off its plane");
    else
      require(val < h.offset, Err::PositionCheckFailed,
              "truncated hull leaks through a probe plane");
  }
}

inline CounterexampleInstance build_bodies(int depth) {
  require(depth >= 3, Err::InvalidInput, "depth must be at least 3");
  CounterexampleInstance inst;
  inst.depth = depth;
  inst.xs.resize(depth + 2);
  inst.ys.resize(depth + 2);
  for (int n = 1; n <= depth + 1; ++n) {
    inst.xs[n] = detail_cex::xpoint(n);
    inst.ys[n] = detail_cex::ypoint(n);
  }

  std::vector<Vec<Rat>> k_gen, b_gen;
  for (int n = 1; n <= depth; ++n) {
    auto [s0, s1] = detail_cex::segment_s(n);
    auto [t0, t1] = detail_cex::segment_t(n);
    k_gen.push_back(s0);
    k_gen.push_back(s1);
    b_gen.push_back(t0);
    b_gen.push_back(t1);
  }
  k_gen.push_back({Rat(0), Rat(1), Rat(1)});
  k_gen.push_back({Rat(0), Rat(1), Rat(-1)});
  k_gen = dedup_points(std::move(k_gen));
  b_gen = dedup_points(std::move(b_gen));

  inst.body = convex_hull(k_gen, 3);
  Polytope<Rat> b_raw = convex_hull(b_gen, 3);

  // every generator must survive as a hull vertex
  auto all_vertices = [](const std::vector<Vec<Rat>>& gens, const Polytope<Rat>& hull) {
    for (const auto& g : gens) {
      bool found = false;
      for (const auto& v : hull.verts)
        if (v == g) found = true;
      if (!found) return false;
    }
    return true;
  };
  require(all_vertices(k_gen, inst.body) && all_vertices(b_gen, b_raw), Err::PositionCheckFailed,
          "a generator point fell into the hull of the others");

  PositionReport rep = strongly_general_relative_position(inst.body, b_raw);
  if (!rep.holds) throw PositionError(Err::PositionCheckFailed, rep);

  // verify the probe planes for every odd n reachable at this depth
  for (int n = 3; n + 1 <= depth; n += 2) {
    detail_cex::SupportPlane h = detail_cex::h_plane(n);
    auto [s0, s1] = detail_cex::segment_s(n);
    auto [t0, t1] = detail_cex::segment_t(n);
    verify_separation(inst.body, h, {s0, s1});
    verify_separation(b_raw, h, {t0, t1});
  }

  // recentre the gauge so the origin is interior
  Vec<Rat> c(3, Rat(0));
  for (const auto& v : b_raw.verts) c = vec_add(c, v);
  c = vec_scale(Rat(1) / Rat(b_raw.vertex_count()), c);
  inst.gauge = b_raw.translated(vec_neg(c));
  inst.gauge_shift = c;
  require(inst.gauge.locate(Vec<Rat>(3, Rat(0))) == Location::Inside, Err::InternalError,
          "recentred gauge does not contain the origin");
  return inst;
}

struct ProbeResult {
  int n = 0;
  Rat lambda;
  Rat ratio_sq;       // squared Lipschitz quotient, exact
  Rat bound_sq;       // (n+1)^2 / 52, exact
  double ratio = 0;
  double bound = 0;
  Vec<Rat> proj1, proj2;  // q(z_1), q(z_2)
};

// Lipschitz quotient at scale n (odd): the projections of z_1 and z_2 sit
// 1/(n+1) apart while the arguments are closer than 2 sqrt(13)/(n+1)^2.
inline ProbeResult probe_ratio(const CounterexampleInstance& inst, int n) {
  require(n % 2 == 1 && n >= 3 && n + 1 <= inst.depth, Err::InvalidInput,
          "probe index must be odd with n+1 <= depth");
  const Vec<Rat>& xn = inst.xs[n];
  const Vec<Rat>& xn1 = inst.xs[n + 1];
  const Vec<Rat>& yn1 = inst.ys[n + 1];
  Vec<Rat> z1 = vec_add(xn1, yn1);
  Vec<Rat> z0 = vec_add(xn, yn1);
  Vec<Rat> step = vec_sub(xn, xn1);

  auto project = [&](const Vec<Rat>& z, bool check_unique) {
    return gauge_distance(inst.body, inst.gauge, vec_sub(z, inst.gauge_shift), check_unique);
  };

  GaugeResult<Rat> g1 = project(z1, true);
  require(g1.d == 1, Err::PositionCheckFailed, "probe argument not at gauge distance 1");
  require(g1.p == xn1, Err::PositionCheckFailed, "projection of z_1 is not x_{n+1}");

  // The target configuration q(z_2) = y_{n+1} + lambda step in S_n pins
  // lambda exactly: the moving endpoint must land on the segment
  // S_n = [x_{n+1}, y_n]. Solve  y_{n+1} + lambda step = x_{n+1} + s d  for
  // (lambda, s) from two independent coordinates, then verify the third.
  auto [s0_pt, s1_pt] = detail_cex::segment_s(n);
  require(s0_pt == xn1, Err::InternalError, "S_n does not start at x_{n+1}");
  Vec<Rat> d = vec_sub(s1_pt, s0_pt);
  Vec<Rat> rhs = vec_sub(yn1, xn1);
  int c0 = -1, c1 = -1;
  for (int i = 0; i < 3 && c1 < 0; ++i)
    for (int j = i + 1; j < 3 && c1 < 0; ++j)
      if (sgn(d[i] * step[j] - d[j] * step[i]) != 0) {
        c0 = i;
        c1 = j;
      }
  require(c1 >= 0, Err::InfeasibleLambda, "segment directions are parallel");
  // lambda step - s d = -rhs  on coordinates (c0, c1), solved by Cramer
  Rat det = -step[c0] * d[c1] + step[c1] * d[c0];
  Rat lambda = (rhs[c0] * d[c1] - rhs[c1] * d[c0]) / det;
  Rat s = (step[c1] * rhs[c0] - step[c0] * rhs[c1]) / det;
  require(vec_add(yn1, vec_scale(lambda, step)) == vec_add(xn1, vec_scale(s, d)),
          Err::InfeasibleLambda, "endpoint equation inconsistent off the probe plane");
  require(sgn(lambda) > 0 && lambda < 1 && sgn(s) > 0 && s < 1, Err::InfeasibleLambda,
          "touching parameter escapes (0,1)");

  ProbeResult res;
  res.n = n;
  res.lambda = lambda;
  Vec<Rat> z2 = vec_add(z0, vec_scale(res.lambda, step));
  Vec<Rat> target = vec_add(yn1, vec_scale(res.lambda, step));
  GaugeResult<Rat> g2 = project(z2, true);
  require(g2.d == 1 && g2.p == target, Err::InfeasibleLambda,
          "computed lambda lost the touching configuration");

  // Structural scan over the grid k/64: below lambda the gauge sphere still
  // touches K on S_n (distance exactly 1, projection on the segment), above
  // it the distance exceeds 1.
  for (int k = 1; k < 64; ++k) {
    Rat lam = make_rat(k, 64);
    if (lam == lambda) continue;
    GaugeResult<Rat> g = project(vec_add(z0, vec_scale(lam, step)), false);
    if (lam < lambda) {
      require(g.d == 1, Err::InfeasibleLambda, "touching lost below the critical lambda");
      Vec<Rat> rel = vec_sub(g.p, xn1);
      Rat along = dot(rel, d) / dot(d, d);
      require(cross3(rel, d) == Vec<Rat>(3, Rat(0)) && sgn(along) >= 0 && along <= 1,
              Err::InfeasibleLambda, "projection off S_n below the critical lambda");
    } else {
      require(g.d > 1, Err::InfeasibleLambda, "gauge distance fails to grow past lambda");
    }
  }

  res.proj1 = g1.p;
  res.proj2 = g2.p;
  Rat num = norm_sq(vec_sub(g1.p, g2.p));
  Rat den = norm_sq(vec_sub(z1, z2));
  res.ratio_sq = num / den;
  res.bound_sq = make_rat(Int(n + 1) * (n + 1), 52);

  // the two displayed distance estimates, compared exactly on squares
  require(num > make_rat(1, Int(n + 1) * (n + 1)), Err::BoundViolated,
          "projection gap estimate violated");
  require(den < make_rat(52, Int(n + 1) * (n + 1) * (n + 1) * (n + 1)), Err::BoundViolated,
          "argument gap estimate violated");
  require(res.ratio_sq > res.bound_sq, Err::BoundViolated, "Lipschitz quotient bound violated");

  res.ratio = std::sqrt(to_double(res.ratio_sq));
  res.bound = std::sqrt(to_double(res.bound_sq));
  return res;
}

}  // namespace affdia
