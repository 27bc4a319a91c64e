#include "doctest.h"

#include "affdia/counterexample.hpp"
#include "affdia/io.hpp"
#include "helpers.hpp"

using namespace affdia;
using namespace affdia::testing;

TEST_CASE("depth 4: all ten generators survive as hull vertices") {
  CounterexampleInstance inst = build_bodies(4);
  // body: x_2, x_4, y_1, y_3, y_5 plus two anchors; gauge: x_1, x_3, x_5, y_2, y_4
  CHECK(inst.body.vertex_count() == 7);
  CHECK(inst.gauge.vertex_count() == 5);
  for (int n : {2, 4}) {
    bool found = false;
    for (const auto& v : inst.body.verts)
      if (v == inst.xs[n]) found = true;
    CHECK(found);
  }
  for (int n : {1, 3, 5}) {
    bool found = false;
    for (const auto& v : inst.body.verts)
      if (v == inst.ys[n]) found = true;
    CHECK(found);
  }
  for (int n : {1, 3, 5}) {
    bool found = false;
    for (const auto& v : inst.gauge.verts)
      if (v == vec_sub(inst.xs[n], inst.gauge_shift)) found = true;
    CHECK(found);
  }
}

TEST_CASE("depth 4 passes the strong position check by construction") {
  CounterexampleInstance inst = build_bodies(4);
  Polytope<Rat> b_raw = inst.gauge.translated(inst.gauge_shift);
  CHECK(strongly_general_relative_position(inst.body, b_raw).holds);
}

TEST_CASE("minimal depth builds; smaller depths are refused") {
  CHECK_NOTHROW(build_bodies(3));
  CHECK_THROWS_AS(build_bodies(2), Error);
}

TEST_CASE("probe at n=3, depth 6 beats the announced quotient") {
  CounterexampleInstance inst = build_bodies(6);
  ProbeResult pr = probe_ratio(inst, 3);
  CHECK(pr.bound_sq == make_rat(4, 13));  // (n+1)^2/52
  CHECK(pr.ratio_sq > pr.bound_sq);
  CHECK(pr.ratio == doctest::Approx(1.5415).epsilon(1e-3));
  CHECK(pr.lambda == make_rat(3, 4));
  // the projection of z_1 is x_{n+1} exactly
  CHECK(pr.proj1 == inst.xs[4]);

  // the two displayed distance estimates, recomputed here
  Vec<Rat> gap = vec_sub(pr.proj1, pr.proj2);
  CHECK(norm_sq(gap) > make_rat(1, 16));
  ProbeResult pr5 = probe_ratio(build_bodies(8), 5);
  CHECK(pr5.bound_sq == make_rat(36, 52));
  CHECK(pr5.ratio_sq > pr5.bound_sq);
}

TEST_CASE("probes out of range are refused") {
  CounterexampleInstance inst = build_bodies(6);
  CHECK_THROWS_AS(probe_ratio(inst, 4), Error);  // even
  CHECK_THROWS_AS(probe_ratio(inst, 7), Error);  // needs depth >= 8
  CHECK_THROWS_AS(probe_ratio(inst, 1), Error);
}

TEST_CASE("quotients grow without bound over the probed range") {
  CounterexampleInstance inst = build_bodies(10);
  Rat prev = 0;
  for (int n : {3, 5, 7, 9}) {
    ProbeResult pr = probe_ratio(inst, n);
    CHECK(pr.ratio_sq > prev);
    prev = pr.ratio_sq;
  }
  CHECK(prev > 1);  // the n=9 quotient already exceeds every 1-Lipschitz bound
}

TEST_CASE("depth-6 instance matches the committed fixture") {
  CounterexampleInstance inst = build_bodies(6);
  Json j = load_json_file(std::string(AFFDIA_DATA_DIR) + "/counterexample_n6.json");
  PointSet body = pointset_from_json(j["body"]);
  PointSet gauge = pointset_from_json(j["gauge"]);
  CHECK(inst.body.verts == body.points);
  CHECK(inst.gauge.verts == gauge.points);
  Vec<Rat> shift;
  for (const auto& c : j["gauge_shift"]) shift.push_back(rat_from_json(c));
  CHECK(inst.gauge_shift == shift);
}

TEST_CASE("deeper truncations keep growing the quotient") {
  CounterexampleInstance inst = build_bodies(12);
  ProbeResult p9 = probe_ratio(inst, 9);
  ProbeResult p11 = probe_ratio(inst, 11);
  CHECK(p11.ratio_sq > p9.ratio_sq);
  CHECK(p11.ratio_sq > p11.bound_sq);
  CHECK(p11.lambda == make_rat(11, 12));
}
