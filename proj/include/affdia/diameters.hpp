#pragma once

// Mean number of affine diameters of a polytope, computed two independent
// ways plus a seeded Monte Carlo estimator.
//
// For a polytope P with P and -P in general relative position, every facet of
// the difference body DP = P - P determines a pair of opposite faces
// F = F(P,u), G = F(P,-u) with dim F + dim G = n - 1, and the slab
//   conv(F u G)  (the set swept by the chords from F to G)
// collects exactly the points lying on the corresponding family of affine
// diameters. The mean count is
//   (1 / 2 V_n(P)) * sum over facets of DP of vol(slab),
// and independently (n+1)/V_n(P) * int_0^1 V_n((1-t)P - tP) dt - 1. Both are
// evaluated exactly and must agree bit for bit.
//
// Slab volumes are verified against a closed form per facet type. With the
// unnormalized facet normal u of DP and h = h(DP,u) measured against u, the
// Euclidean width is h/|u| and
//   polygon edge e:            vol = 1/2 * h * |det(e, u)| / |u|^2,
//   3D facet F, opposite vtx:  vol = 1/3 * h * |<VA(F), u>| / |u|^2,
//   3D edge-edge (d1, d2):     vol = 1/6 * h * |<d1 x d2, u>| / |u|^2,
// where VA(F) is the vector area of the facet cycle. The last line is the
// mixed area of two segments, v(s1, s2) = |s1||s2| sin(phi) / 2, with the
// angle phi taken between the directions in the plane orthogonal to u; the
// division by |u|^2 converts the two support/length factors measured against
// u to Euclidean scale.

#include <cmath>
#include <map>
#include <vector>

#include "affdia/lp.hpp"
#include "affdia/minkowski.hpp"
#include "affdia/position.hpp"
#include "affdia/rng.hpp"

namespace affdia {

struct FacetPair {
  Vec<Rat> normal;     // facet normal u of DP (unnormalized)
  Rat width;           // h(DP, u) against the unnormalized normal
  Face<Rat> face_pos;  // F(P, u)
  Face<Rat> face_neg;  // F(P, -u); the opposite face of -P, reflected into P
  Polytope<Rat> slab;  // conv(face_pos u face_neg)
};

inline std::vector<FacetPair> facet_pairs(const Polytope<Rat>& p) {
  require(p.dim == 2 || p.dim == 3, Err::NotSupported, "dim 2 or 3 only");
  PositionReport rep = general_relative_position(p);
  if (!rep.holds) throw PositionError(Err::NotGeneralPosition, rep);

  Polytope<Rat> dp = difference_body(p);
  std::vector<FacetPair> pairs;
  pairs.reserve(dp.facets.size());
  for (const auto& f : dp.facets) {
    FacetPair fp;
    fp.normal = f.normal;
    fp.width = f.offset;
    fp.face_pos = p.support_set(f.normal);
    fp.face_neg = p.support_set(vec_neg(f.normal));
    require(fp.face_pos.dim + fp.face_neg.dim == p.dim - 1, Err::InternalError,
            "facet pair with wrong face dimensions");
    std::vector<Vec<Rat>> pts;
    for (int vi : fp.face_pos.verts) pts.push_back(p.verts[vi]);
    for (int vi : fp.face_neg.verts) pts.push_back(p.verts[vi]);
    fp.slab = convex_hull(pts, p.dim);
    pairs.push_back(std::move(fp));
  }
  return pairs;
}

struct SlabVolumes {
  Rat hull;     // volume of conv(F u G)
  Rat formula;  // width-times-mixed-volume closed form
};

inline SlabVolumes slab_volume(const FacetPair& fp, const Polytope<Rat>& p) {
  SlabVolumes sv;
  sv.hull = fp.slab.volume();

  const Vec<Rat>& u = fp.normal;
  Rat u2 = norm_sq(u);
  if (p.dim == 2) {
    const Face<Rat>& edge = fp.face_pos.dim == 1 ? fp.face_pos : fp.face_neg;
    Vec<Rat> d = vec_sub(p.verts[edge.verts[1]], p.verts[edge.verts[0]]);
    Rat x = cross2(d, u);
    if (sgn(x) < 0) x = -x;
    sv.formula = fp.width * x / (u2 * 2);
  } else if (fp.face_pos.dim == 1 && fp.face_neg.dim == 1) {
    Vec<Rat> d1 = vec_sub(p.verts[fp.face_pos.verts[1]], p.verts[fp.face_pos.verts[0]]);
    Vec<Rat> d2 = vec_sub(p.verts[fp.face_neg.verts[1]], p.verts[fp.face_neg.verts[0]]);
    Rat x = dot(cross3(d1, d2), u);
    if (sgn(x) < 0) x = -x;
    sv.formula = fp.width * x / (u2 * 6);
  } else {
    const Face<Rat>& facet_face = fp.face_pos.dim == 2 ? fp.face_pos : fp.face_neg;
    // locate the facet of P spanned by this face to recover its vertex cycle
    const std::vector<int> want = facet_face.verts;  // sorted
    const Facet<Rat>* hit = nullptr;
    for (const auto& f : p.facets) {
      std::vector<int> have = f.verts;
      std::sort(have.begin(), have.end());
      if (have == want) {
        hit = &f;
        break;
      }
    }
    require(hit != nullptr, Err::InternalError, "2-face is not a facet of P");
    Vec<Rat> va(3, Rat(0));  // twice the vector area of the cycle
    for (size_t i = 0; i < hit->verts.size(); ++i)
      va = vec_add(va, cross3(p.verts[hit->verts[i]], p.verts[hit->verts[(i + 1) % hit->verts.size()]]));
    Rat x = dot(va, u) / 2;
    if (sgn(x) < 0) x = -x;
    sv.formula = fp.width * x / (u2 * 3);
  }
  require(sv.hull == sv.formula, Err::MismatchedPaths, "slab volume paths disagree");
  return sv;
}

struct DiameterCount {
  Rat value;                      // the mean number of affine diameters
  Rat via_slab_sum;               // facet-pair path
  Rat via_integral;               // volume-polynomial path
  std::vector<Rat> slab_volumes;  // per ordered facet pair
};

inline DiameterCount na_exact(const Polytope<Rat>& p, const std::vector<FacetPair>* cached = nullptr) {
  std::vector<FacetPair> local;
  if (!cached) {
    local = facet_pairs(p);
    cached = &local;
  }
  DiameterCount dc;
  Rat sum = 0;
  for (const auto& fp : *cached) {
    SlabVolumes sv = slab_volume(fp, p);
    dc.slab_volumes.push_back(sv.hull);
    sum += sv.hull;
  }
  Rat vol = p.volume();
  dc.via_slab_sum = sum / (vol * 2);
  dc.via_integral = Rat(p.dim + 1) * integral_mixed(p) / vol - 1;
  require(dc.via_slab_sum == dc.via_integral, Err::FormulaMismatch,
          "slab-sum and volume-polynomial paths disagree");
  dc.value = dc.via_slab_sum;
  return dc;
}

// The facets of DP come in antipodal pairs carrying set-equal slabs; return
// one representative index per unordered pair.
inline std::vector<int> unordered_slab_indices(const std::vector<FacetPair>& pairs) {
  std::map<Vec<Rat>, std::vector<int>> by_axis;
  for (size_t i = 0; i < pairs.size(); ++i)
    by_axis[canonical_axis(pairs[i].normal).first].push_back(static_cast<int>(i));
  std::vector<int> reps;
  for (const auto& [axis, ids] : by_axis) {
    require(ids.size() == 2, Err::InternalError, "facet normal without antipodal partner");
    require(pairs[ids[0]].slab.verts == pairs[ids[1]].slab.verts, Err::InternalError,
            "antipodal slabs differ");
    reps.push_back(ids[0]);
  }
  return reps;
}

// Number of affine diameters through an interior point: half the number of
// ordered facet pairs whose slab contains it. Membership is decided by the
// barycentric LP and cross-checked against the slab H-representation; points
// on a slab boundary belong to the exceptional (measure-zero) set.
inline int na_point(const Polytope<Rat>& p, const Vec<Rat>& z,
                    const std::vector<FacetPair>* cached = nullptr) {
  std::vector<FacetPair> local;
  if (!cached) {
    local = facet_pairs(p);
    cached = &local;
  }
  require(p.locate(z) == Location::Inside, Err::InvalidInput, "query point not interior");
  int count = 0;
  for (int idx : unordered_slab_indices(*cached)) {
    const Polytope<Rat>& slab = (*cached)[idx].slab;
    std::vector<Vec<Rat>> pts = slab.verts;
    bool member = in_convex_hull_lp(pts, z);
    Location loc = slab.locate(z);
    require(member == (loc != Location::Outside), Err::InternalError,
            "LP membership disagrees with H-representation");
    if (loc == Location::Boundary) fail(Err::OnExceptionalSet, "point on a slab boundary");
    if (loc == Location::Inside) ++count;
  }
  return count;
}

struct MonteCarloResult {
  double mean = 0;
  double stderr_ = 0;
  long long samples = 0;
  long long exceptional = 0;  // resampled boundary-tolerance hits
};

namespace detail_mc {

struct HalfPlanes {  // unit-normalized rows for fast point tests
  std::vector<std::vector<double>> normals;
  std::vector<double> offsets;
};

template <class R>
HalfPlanes to_halfplanes(const Polytope<R>& p) {
  HalfPlanes h;
  for (const auto& f : p.facets) {
    Vec<double> n = vec_to_double(f.normal);
    double len = 0;
    for (double c : n) len += c * c;
    len = std::sqrt(len);
    for (double& c : n) c /= len;
    h.normals.push_back(n);
    h.offsets.push_back(ScalarTraits<R>::dbl(f.offset) / len);
  }
  return h;
}

inline double min_margin(const HalfPlanes& h, const double* z, int dim) {
  double best = std::numeric_limits<double>::infinity();
  for (size_t f = 0; f < h.normals.size(); ++f) {
    double d = h.offsets[f];
    for (int k = 0; k < dim; ++k) d -= h.normals[f][k] * z[k];
    best = std::min(best, d);  // >0 strictly inside, <0 outside
  }
  return best;
}

}  // namespace detail_mc

// Uniform rejection sampling over P with the slab membership counts taken
// from exactly-precomputed slab H-representations. Samples are drawn from
// fixed per-chunk substreams, so the result depends only on (samples, seed).
inline MonteCarloResult na_montecarlo(const Polytope<Rat>& p, long long samples, uint64_t seed,
                                      double eps = 1e-9) {
  require(samples > 0, Err::InvalidInput, "need a positive sample count");
  std::vector<FacetPair> pairs = facet_pairs(p);
  std::vector<detail_mc::HalfPlanes> slabs;
  for (int idx : unordered_slab_indices(pairs)) slabs.push_back(detail_mc::to_halfplanes(pairs[idx].slab));
  detail_mc::HalfPlanes body = detail_mc::to_halfplanes(p);

  BBox<Rat> bb = p.bbox();
  Vec<double> lo = vec_to_double(bb.lo), hi = vec_to_double(bb.hi);
  const int dim = p.dim;

  MonteCarloResult res;
  res.samples = samples;
  double sum = 0, sumsq = 0;
  constexpr long long kChunk = 4096;
  for (long long chunk = 0; chunk * kChunk < samples; ++chunk) {
    Rng rng(seed, static_cast<uint64_t>(chunk));
    const long long in_chunk = std::min(kChunk, samples - chunk * kChunk);
    for (long long s = 0; s < in_chunk; ++s) {
      int count = 0;
      for (;;) {
        double z[3];
        for (int k = 0; k < dim; ++k) z[k] = rng.uniform(lo[k], hi[k]);
        if (detail_mc::min_margin(body, z, dim) <= eps) continue;  // outside or too close to bd P
        bool exceptional = false;
        count = 0;
        for (const auto& slab : slabs) {
          double m = detail_mc::min_margin(slab, z, dim);
          if (std::fabs(m) <= eps) {
            exceptional = true;
            break;
          }
          if (m > eps) ++count;
        }
        if (exceptional) {
          ++res.exceptional;
          continue;
        }
        break;
      }
      sum += count;
      sumsq += static_cast<double>(count) * count;
    }
  }
  res.mean = sum / static_cast<double>(samples);
  double var = samples > 1 ? (sumsq - sum * sum / static_cast<double>(samples)) /
                                 static_cast<double>(samples - 1)
                           : 0.0;
  res.stderr_ = std::sqrt(std::max(0.0, var) / static_cast<double>(samples));
  return res;
}

// The 2m slab triangles of a polygon translated to the origin, together with
// their reflections; they tile the difference body.
inline std::vector<Polytope<Rat>> planar_triangulation(const Polytope<Rat>& p) {
  require(p.dim == 2, Err::NotSupported, "planar triangulation needs a polygon");
  PositionReport rep = general_relative_position(p);
  if (!rep.holds) throw PositionError(Err::NotGeneralPosition, rep);
  std::vector<Polytope<Rat>> tris;
  const Vec<Rat> origin(2, Rat(0));
  for (const auto& f : p.facets) {
    Face<Rat> opp = p.support_set(vec_neg(f.normal));
    require(opp.dim == 0, Err::InternalError, "opposite support set is not a vertex");
    const Vec<Rat>& w = p.verts[opp.verts[0]];
    Vec<Rat> a = vec_sub(p.verts[f.verts[0]], w);
    Vec<Rat> b = vec_sub(p.verts[f.verts[1]], w);
    tris.push_back(convex_hull_2d<Rat>({a, b, origin}));
    tris.push_back(convex_hull_2d<Rat>({vec_neg(a), vec_neg(b), origin}));
  }
  return tris;
}

// Affine diameters through an interior point of a polygon, one segment per
// unordered slab containing it.
inline std::vector<std::pair<Vec<Rat>, Vec<Rat>>> diameters_through(
    const Polytope<Rat>& p, const Vec<Rat>& z, const std::vector<FacetPair>& pairs) {
  require(p.dim == 2, Err::NotSupported, "diameter segments are planar only");
  std::vector<std::pair<Vec<Rat>, Vec<Rat>>> segs;
  for (int idx : unordered_slab_indices(pairs)) {
    const FacetPair& fp = pairs[idx];
    if (fp.slab.locate(z) != Location::Inside) continue;
    const Face<Rat>& edge = fp.face_pos.dim == 1 ? fp.face_pos : fp.face_neg;
    const Face<Rat>& vert = fp.face_pos.dim == 1 ? fp.face_neg : fp.face_pos;
    const Vec<Rat>& w = p.verts[vert.verts[0]];
    const Vec<Rat>& u = edge.normal;
    Rat h = p.support_value(u);
    Rat s = (h - dot(u, w)) / (dot(u, z) - dot(u, w));
    Vec<Rat> q = vec_add(w, vec_scale(s, vec_sub(z, w)));
    segs.push_back({w, q});
  }
  return segs;
}

}  // namespace affdia
