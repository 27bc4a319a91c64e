#include "doctest.h"

#include "affdia/diameters.hpp"
#include "affdia/gauge.hpp"
#include "helpers.hpp"

using namespace affdia;
using namespace affdia::testing;

// Broad seeded campaign over random bodies: every identity the exact paths
// promise must hold verbatim on each accepted draw.

TEST_CASE("random polygons: planar identity, bounds, width identity, volume bounds") {
  Rng rng(20240808);
  int accepted = 0, rejected = 0;
  while (accepted < 60) {
    std::vector<Vec<Rat>> pts;
    const int k = 4 + static_cast<int>(rng.below(6));
    for (int i = 0; i < k; ++i)
      pts.push_back({Rat(rng.integer(-30, 30)), Rat(rng.integer(-30, 30))});
    Polytope<Rat> p;
    try {
      p = convex_hull(pts, 2);
    } catch (const Error&) {
      continue;
    }
    if (!general_relative_position(p).holds) {
      ++rejected;
      continue;
    }
    ++accepted;

    DiameterCount dc = na_exact(p);  // both routes compared internally
    Rat ratio = difference_body(p).volume() / (p.volume() * 2);
    CHECK(dc.value == ratio);
    CHECK(dc.value > 2);
    CHECK(dc.value <= 3);
    CHECK((dc.value == 3) == (p.vertex_count() == 3));

    CHECK(width_identity_check(p).ok);

    RsReport rs = rogers_shephard_check(p);
    CHECK(sgn(rs.lower_gap) > 0);  // polygons passing the position check are asymmetric
    CHECK((rs.upper_gap == 0) == (p.vertex_count() == 3));

    Rat tri_area = 0;
    for (const auto& t : planar_triangulation(p)) tri_area += t.volume();
    CHECK(tri_area == difference_body(p).volume());
  }
  CHECK(accepted == 60);
  CHECK(rejected < 600);
}

TEST_CASE("random tetrahedra always land on the simplex value") {
  Rng rng(4242);
  for (int iter = 0; iter < 20; ++iter) {
    std::vector<Vec<Rat>> pts;
    for (int i = 0; i < 4; ++i)
      pts.push_back({Rat(rng.integer(-12, 12)), Rat(rng.integer(-12, 12)), Rat(rng.integer(-12, 12))});
    Polytope<Rat> t;
    try {
      t = convex_hull(pts, 3);
    } catch (const Error&) {
      continue;
    }
    CHECK(general_relative_position(t).holds);  // simplices always pass
    CHECK(na_exact(t).value == 7);
    CHECK(rogers_shephard_check(t).upper_gap == 0);
  }
}

TEST_CASE("random non-simplex solids stay strictly inside the bounds") {
  Rng rng(5150);
  int accepted = 0;
  while (accepted < 10) {
    std::vector<Vec<Rat>> pts;
    const int k = 5 + static_cast<int>(rng.below(3));
    for (int i = 0; i < k; ++i)
      pts.push_back({Rat(rng.integer(-8, 8)), Rat(rng.integer(-8, 8)), Rat(rng.integer(-8, 8))});
    Polytope<Rat> p;
    try {
      p = convex_hull(pts, 3);
    } catch (const Error&) {
      continue;
    }
    if (p.vertex_count() < 5 || !general_relative_position(p).holds) continue;
    ++accepted;

    DiameterCount dc = na_exact(p);
    CHECK(dc.value > 3);
    CHECK(dc.value < 7);
    RsReport rs = rogers_shephard_check(p);
    CHECK(sgn(rs.lower_gap) > 0);
    CHECK(sgn(rs.upper_gap) > 0);
    // reflection invariance on the spatial route as well
    CHECK(na_exact(reflect(p)).value == dc.value);
  }
}

TEST_CASE("random strongly-general polygon pairs: bundle closure and measures") {
  Rng rng(31337);
  int accepted = 0;
  while (accepted < 12) {
    auto draw = [&](long long lo, long long hi) {
      std::vector<Vec<Rat>> pts;
      for (int i = 0; i < 5; ++i)
        pts.push_back({Rat(rng.integer(lo, hi)), Rat(rng.integer(lo, hi))});
      return pts;
    };
    Polytope<Rat> k, b;
    try {
      k = convex_hull(draw(-9, 9), 2);
      b = convex_hull(draw(-6, 6), 2);
    } catch (const Error&) {
      continue;
    }
    if (b.locate({Rat(0), Rat(0)}) != Location::Inside) continue;
    if (!strongly_general_relative_position(k, b).holds) continue;
    ++accepted;

    std::vector<BundlePiece> pieces = normal_bundle(k, b);
    CHECK(pieces.size() == static_cast<size_t>(k.vertex_count() + b.vertex_count()));
    double k_len = 0, b_len = 0;
    for (const auto& pc : pieces) (pc.kind == PieceKind::EdgeOfK ? k_len : b_len) += pc.length;
    CHECK(k_len == doctest::Approx(polygon_perimeter(k)).epsilon(1e-9));
    CHECK(b_len == doctest::Approx(polygon_perimeter(b)).epsilon(1e-9));
    length_measures(k, b, quadrant_arcs());  // throws on any per-arc mismatch

    // gauge distance of a random exterior point agrees with its reconstruction
    Vec<Rat> x = {rng.rational(Rat(-20), Rat(20)), rng.rational(Rat(-20), Rat(20))};
    if (k.locate(x) == Location::Outside) {
      GaugeResult<Rat> g = gauge_distance(k, b, x);
      CHECK(vec_add(g.p, vec_scale(g.d, g.u)) == x);
    }
  }
}
