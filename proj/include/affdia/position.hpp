#pragma once

// Relative-position predicates. Both checks are exact-arithmetic only: a
// tolerance could silently change a face dimension count.
//
//   general relative position of P and -P:
//     dim(F(P,u) + F(P,-u)) = n-1  implies  dim F(P,u) + dim F(P,-u) = n-1.
//   Directions with dim F(P-P, u) = n-1 are exactly the facet normals of the
//   difference body, so scanning those is complete.
//
//   strongly general relative position of K and B:
//     dim F(K,u) + dim F(B,u) = dim F(K+B,u) for every direction u.
//   The dimension of F(K+B,u) is constant on the relative interior of each
//   normal cone of K+B, so one representative direction per face of K+B
//   decides the property; representatives are sums of incident facet normals.

#include <vector>

#include "affdia/minkowski.hpp"
#include "affdia/polytope.hpp"

namespace affdia {

struct PositionWitness {
  Vec<Rat> direction;
  int dim_first = 0;   // dim F(P,u) resp. dim F(K,u)
  int dim_second = 0;  // dim F(P,-u) resp. dim F(B,u)
  int dim_sum = 0;     // dim of the face of the sum body
};

struct PositionReport {
  bool holds = false;
  std::vector<PositionWitness> witnesses;
};

class PositionError : public Error {
 public:
  PositionError(Err kind, PositionReport report)
      : Error(kind, "relative-position requirement failed"), report_(std::move(report)) {}
  const PositionReport& report() const { return report_; }

 private:
  PositionReport report_;
};

inline PositionReport general_relative_position(const Polytope<Rat>& p) {
  require(p.dim == 2 || p.dim == 3, Err::NotSupported, "dim 2 or 3 only");
  require(p.full_dimensional(), Err::DegenerateInput, "polytope not full-dimensional");
  PositionReport rep;
  Polytope<Rat> dp = difference_body(p);
  for (const auto& f : dp.facets) {
    Face<Rat> a = p.support_set(f.normal);
    Face<Rat> b = p.support_set(vec_neg(f.normal));
    if (a.dim + b.dim != p.dim - 1)
      rep.witnesses.push_back({f.normal, a.dim, b.dim, p.dim - 1});
  }
  rep.holds = rep.witnesses.empty();
  return rep;
}

// One relative-interior representative per face of the sum body.
inline std::vector<std::pair<Vec<Rat>, int>> face_fan_representatives(const Polytope<Rat>& s) {
  std::vector<std::pair<Vec<Rat>, int>> reps;  // (direction, expected face dim)
  if (s.dim == 2) {
    const int m = s.vertex_count();
    for (const auto& f : s.facets) reps.push_back({f.normal, 1});
    for (int v = 0; v < m; ++v) {
      // vertex v joins edges (v-1, v) and (v, v+1)
      const Vec<Rat>& n_prev = s.facets[(v + m - 1) % m].normal;
      const Vec<Rat>& n_next = s.facets[v].normal;
      reps.push_back({vec_add(n_prev, n_next), 0});
    }
    return reps;
  }
  for (const auto& f : s.facets) reps.push_back({f.normal, 2});
  for (const auto& e : polytope_edges(s))
    reps.push_back({vec_add(s.facets[e.f0].normal, s.facets[e.f1].normal), 1});
  auto incidence = vertex_facet_incidence(s);
  for (const auto& facs : incidence) {
    Vec<Rat> u(s.dim, Rat(0));
    for (int fi : facs) u = vec_add(u, s.facets[fi].normal);
    reps.push_back({u, 0});
  }
  return reps;
}

inline PositionReport strongly_general_relative_position(const Polytope<Rat>& k,
                                                         const Polytope<Rat>& b) {
  require(k.dim == b.dim, Err::DimensionMismatch, "bodies in different dimensions");
  require(k.dim == 2 || k.dim == 3, Err::NotSupported, "dim 2 or 3 only");
  PositionReport rep;
  Polytope<Rat> s = minkowski_sum(k, b);
  for (const auto& [u, expected_dim] : face_fan_representatives(s)) {
    Face<Rat> fs = s.support_set(u);
    require(fs.dim == expected_dim, Err::InternalError, "face-fan representative off its cone");
    Face<Rat> fk = k.support_set(u);
    Face<Rat> fb = b.support_set(u);
    if (fk.dim + fb.dim != fs.dim) rep.witnesses.push_back({u, fk.dim, fb.dim, fs.dim});
  }
  rep.holds = rep.witnesses.empty();
  return rep;
}

}  // namespace affdia
