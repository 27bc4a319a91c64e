#include "doctest.h"

#include "affdia/minkowski.hpp"
#include "affdia/rng.hpp"
#include "helpers.hpp"

using namespace affdia;
using namespace affdia::testing;

namespace {
Polytope<Rat> unit_triangle() { return convex_hull(rpts({{0, 0}, {1, 0}, {0, 1}}), 2); }
Polytope<Rat> unit_square() { return convex_hull(rpts({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), 2); }
Polytope<Rat> unit_tetra() {
  return convex_hull(rpts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 3);
}
}  // namespace

TEST_CASE("adding a point translates") {
  Polytope<Rat> t = unit_triangle();
  Polytope<Rat> origin;
  origin.dim = 2;
  origin.verts = {rv({0, 0})};
  Polytope<Rat> s = minkowski_sum(t, origin);
  CHECK(s.verts == t.verts);
  Polytope<Rat> shift;
  shift.dim = 2;
  shift.verts = {rv({5, 7})};
  CHECK(minkowski_sum(t, shift).volume() == t.volume());
}

TEST_CASE("triangle plus its reflection is a hexagon") {
  Polytope<Rat> t = unit_triangle();
  Polytope<Rat> d = difference_body(t);
  CHECK(d.vertex_count() == 6);
  CHECK(d.facet_count() == 6);
  CHECK(d.volume() == 3);
}

TEST_CASE("cube plus reflected cube doubles the cube") {
  std::vector<Vec<Rat>> cube;
  for (int x : {0, 1})
    for (int y : {0, 1})
      for (int z : {0, 1}) cube.push_back(rv({x, y, z}));
  Polytope<Rat> c = convex_hull(cube, 3);
  Polytope<Rat> d = difference_body(c);
  CHECK(d.facet_count() == 6);
  CHECK(d.volume() == 8);
  CHECK(d.support_value(rv({1, 0, 0})) == 1);
  CHECK(d.support_value(rv({-1, 0, 0})) == 1);
}

TEST_CASE("tetrahedron difference body: 20 times the volume, oracle-checked") {
  Polytope<Rat> s = unit_tetra();
  Polytope<Rat> d = difference_body(s);
  CHECK(d.volume() == s.volume() * 20);
  std::vector<Vec<Rat>> diffs;
  for (const auto& a : s.verts)
    for (const auto& b : s.verts) diffs.push_back(vec_sub(a, b));
  CHECK(d.volume() == oracle_volume3(diffs));
}

TEST_CASE("dimension mismatch refused") {
  CHECK_THROWS_AS(minkowski_sum(unit_triangle(), unit_tetra()), Error);
}

TEST_CASE("volume polynomial of a centrally symmetric body is constant") {
  VolumePolynomial vp = volume_polynomial(unit_square());
  CHECK(vp.coeffs == std::vector<Rat>{Rat(1), Rat(2), Rat(1)});
  for (const auto& m : vp.mixed_volumes) CHECK(m == 1);
  for (long long k : {1, 2, 3}) {
    Rat t = make_rat(k, 4);
    CHECK(evaluate_bernstein(vp, t) == 1);
  }
}

TEST_CASE("simplex integrals attain the upper volume bound") {
  CHECK(integral_mixed(unit_triangle()) == make_rat(2, 3));  // (4/3) * (1/2)
  CHECK(integral_mixed(unit_tetra()) == make_rat(1, 3));     // (8/4) * (1/6)
}

TEST_CASE("Bernstein form reproduces hull volumes at random interior nodes") {
  Polytope<Rat> q = convex_hull(rpts({{0, 0}, {3, 0}, {4, 2}, {1, 3}}), 2);
  VolumePolynomial vp = volume_polynomial(q);
  Rng rng(17);
  for (int i = 0; i < 5; ++i) {
    Rat t = make_rat(rng.integer(1, 63), 64);
    CHECK(evaluate_bernstein(vp, t) == self_combination(q, t).volume());
  }
  Polytope<Rat> s = convex_hull(rpts({{0, 0, 0}, {5, 1, 0}, {1, 4, 1}, {2, 1, 5}}), 3);
  VolumePolynomial vs = volume_polynomial(s);
  for (int i = 0; i < 3; ++i) {
    Rat t = make_rat(rng.integer(1, 63), 64);
    CHECK(evaluate_bernstein(vs, t) == self_combination(s, t).volume());
  }
}

TEST_CASE("reflection reverses the coefficient list") {
  Polytope<Rat> q = convex_hull(rpts({{0, 0}, {3, 0}, {4, 2}, {1, 3}}), 2);
  VolumePolynomial a = volume_polynomial(q);
  VolumePolynomial b = volume_polynomial(reflect(q));
  std::vector<Rat> rev = b.coeffs;
  std::reverse(rev.begin(), rev.end());
  CHECK(a.coeffs == rev);
}

TEST_CASE("translation invariance and scaling covariance") {
  Polytope<Rat> q = convex_hull(rpts({{0, 0}, {3, 0}, {4, 2}, {1, 3}}), 2);
  VolumePolynomial base = volume_polynomial(q);
  VolumePolynomial moved = volume_polynomial(q.translated(rv({11, -4})));
  CHECK(base.coeffs == moved.coeffs);
  Rat lam = make_rat(3, 2);
  VolumePolynomial scaled = volume_polynomial(scaled_copy(q, lam));
  for (int k = 0; k <= 2; ++k) CHECK(scaled.coeffs[k] == base.coeffs[k] * lam * lam);
}

TEST_CASE("difference-body volume bounds and their equality cases") {
  RsReport sq = rogers_shephard_check(unit_square());
  CHECK(sq.lower_gap == 0);
  CHECK(sq.upper_gap == make_rat(1, 3));
  RsReport tr = rogers_shephard_check(unit_triangle());
  CHECK(tr.upper_gap == 0);
  CHECK(tr.lower_gap == make_rat(1, 6));
  RsReport te = rogers_shephard_check(unit_tetra());
  CHECK(te.upper_gap == 0);

  // the skew quadrilateral is strict on both sides (regression values)
  Polytope<Rat> q = convex_hull(rpts({{0, 0}, {2, 0}, {2, 1}, {0, 2}}), 2);
  RsReport r = rogers_shephard_check(q);
  CHECK(sgn(r.lower_gap) > 0);
  CHECK(sgn(r.upper_gap) > 0);
  CHECK(r.volume == 3);
  CHECK(r.integral == make_rat(10, 3));
  CHECK(r.lower_gap == make_rat(1, 3));
  CHECK(r.upper_gap == make_rat(2, 3));
}

TEST_CASE("dim >= 4 goes through the analytic simplex identities only") {
  Polytope<Rat> fake;
  fake.dim = 4;
  CHECK_THROWS_AS(volume_polynomial(fake), Error);

  std::vector<Vec<Rat>> simplex4 = {rv({0, 0, 0, 0}), rv({1, 0, 0, 0}), rv({0, 1, 0, 0}),
                                    rv({0, 0, 1, 0}), rv({0, 0, 0, 1})};
  CHECK(simplex_volume(simplex4) == make_rat(1, 24));
  VolumePolynomial vp = simplex_volume_polynomial(simplex4);
  CHECK(integral_of(vp) == make_rat(2, 15));  // (16/5) * (1/24)
  // mean count from the analytic path: (n+1) I / V - 1 = 2^n - 1
  CHECK(Rat(5) * integral_of(vp) / simplex_volume(simplex4) - 1 == 15);
}

TEST_CASE("centrally symmetric solid: the integral collapses to the volume") {
  std::vector<Vec<Rat>> cube;
  for (int x : {0, 1})
    for (int y : {0, 1})
      for (int z : {0, 1}) cube.push_back(rv({x, y, z}));
  Polytope<Rat> c = convex_hull(cube, 3);
  CHECK(integral_mixed(c) == 1);
  CHECK(rogers_shephard_check(c).lower_gap == 0);
}
