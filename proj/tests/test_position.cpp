#include "doctest.h"

#include "affdia/position.hpp"
#include "helpers.hpp"

using namespace affdia;
using namespace affdia::testing;

namespace {
Polytope<Rat> triangle() { return convex_hull(rpts({{0, 0}, {1, 0}, {0, 1}}), 2); }
Polytope<Rat> square() { return convex_hull(rpts({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), 2); }
}  // namespace

TEST_CASE("triangle is in general relative position") {
  PositionReport rep = general_relative_position(triangle());
  CHECK(rep.holds);
  CHECK(rep.witnesses.empty());
}

TEST_CASE("square fails with parallel-edge witnesses") {
  PositionReport rep = general_relative_position(square());
  CHECK_FALSE(rep.holds);
  CHECK(rep.witnesses.size() == 4);  // both horizontal and vertical pairs, both signs
  bool found_horizontal = false;
  for (const auto& w : rep.witnesses) {
    CHECK(w.dim_first + w.dim_second == 2);
    CHECK(w.dim_sum == 1);
    if (canonical_axis(w.direction).first == rv({1, 0})) found_horizontal = true;
  }
  CHECK(found_horizontal);
}

TEST_CASE("tetrahedron face dimensions pair up to n-1") {
  Polytope<Rat> t = convex_hull(rpts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 3);
  PositionReport rep = general_relative_position(t);
  CHECK(rep.holds);
  // brute check over every facet normal of the difference body
  Polytope<Rat> dp = difference_body(t);
  int facet_vertex = 0, edge_edge = 0;
  for (const auto& f : dp.facets) {
    int a = t.support_set(f.normal).dim;
    int b = t.support_set(vec_neg(f.normal)).dim;
    CHECK(a + b == 2);
    if (a == 1) ++edge_edge;
    else ++facet_vertex;
  }
  CHECK(facet_vertex == 8);
  CHECK(edge_edge == 6);
}

TEST_CASE("generic triangle pair is in strongly general relative position") {
  Polytope<Rat> k = convex_hull(rpts({{0, 0}, {4, 1}, {1, 3}}), 2);
  CHECK(strongly_general_relative_position(k, reflect(k)).holds);
}

TEST_CASE("square against itself fails the strong check") {
  PositionReport rep = strongly_general_relative_position(square(), square());
  CHECK_FALSE(rep.holds);
  for (const auto& w : rep.witnesses) CHECK(w.dim_first + w.dim_second > w.dim_sum);
}

TEST_CASE("reflection symmetry of the predicate") {
  for (auto pts : {rpts({{0, 0}, {3, 0}, {4, 2}, {1, 3}}), rpts({{0, 0}, {2, 0}, {3, 2}, {-1, 1}}),
                   rpts({{0, 0}, {1, 0}, {1, 1}, {0, 1}})}) {
    Polytope<Rat> p = convex_hull(pts, 2);
    CHECK(general_relative_position(p).holds == general_relative_position(reflect(p)).holds);
  }
}

TEST_CASE("centrally symmetric polytopes never pass") {
  CHECK_FALSE(general_relative_position(square()).holds);
  Polytope<Rat> hex =
      convex_hull(rpts({{2, 0}, {1, 2}, {-1, 2}, {-2, 0}, {-1, -2}, {1, -2}}), 2);
  CHECK_FALSE(general_relative_position(hex).holds);
  std::vector<Vec<Rat>> cube;
  for (int x : {0, 1})
    for (int y : {0, 1})
      for (int z : {0, 1}) cube.push_back(rv({x, y, z}));
  CHECK_FALSE(general_relative_position(convex_hull(cube, 3)).holds);
}

TEST_CASE("affine images preserve both predicates") {
  Polytope<Rat> q = convex_hull(rpts({{0, 0}, {3, 0}, {4, 2}, {1, 3}}), 2);
  auto apply = [](const Polytope<Rat>& p) {
    std::vector<Vec<Rat>> out;
    for (const auto& v : p.verts) out.push_back({v[0] * 2 - v[1] + 3, v[0] + v[1] * 3 - 1});
    return convex_hull(out, 2);
  };
  CHECK(general_relative_position(q).holds == general_relative_position(apply(q)).holds);
  Polytope<Rat> sq = square();
  CHECK(general_relative_position(sq).holds == general_relative_position(apply(sq)).holds);
}

TEST_CASE("simultaneous affine images preserve the strong predicate") {
  Polytope<Rat> k = convex_hull(rpts({{0, 0}, {4, 1}, {2, 3}}), 2);
  Polytope<Rat> b = convex_hull(rpts({{-2, -1}, {1, -2}, {2, 1}, {-1, 2}}), 2);
  auto apply = [](const Polytope<Rat>& p) {
    std::vector<Vec<Rat>> out;
    for (const auto& v : p.verts) out.push_back({v[0] * 3 + v[1] - 2, -v[0] + v[1] * 2 + 5});
    return convex_hull(out, 2);
  };
  CHECK(strongly_general_relative_position(k, b).holds ==
        strongly_general_relative_position(apply(k), apply(b)).holds);
  Polytope<Rat> sq = convex_hull(rpts({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), 2);
  CHECK(strongly_general_relative_position(sq, sq).holds ==
        strongly_general_relative_position(apply(sq), apply(sq)).holds);
}
