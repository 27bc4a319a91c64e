#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>

#include "affdia/io.hpp"
#include "affdia/rng.hpp"
#include "helpers.hpp"

using namespace affdia;
using namespace affdia::testing;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(AFFDIA_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

std::string data(const std::string& name) { return std::string(AFFDIA_DATA_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = std::string("/tmp/affdia_test_") + name;
  std::ofstream f(path);
  f << text;
  return path;
}

}  // namespace

TEST_CASE("polytope JSON round-trips exactly") {
  for (const char* name : {"triangle.json", "quad_a.json", "tetra_a.json", "hex_perturbed.json"}) {
    PointSet ps = load_pointset(data(name));
    Json j = pointset_to_json(ps.dim, ps.points);
    PointSet back = pointset_from_json(j);
    CHECK(back.dim == ps.dim);
    CHECK(back.points == ps.points);
  }
  Rng rng(8);
  for (int iter = 0; iter < 20; ++iter) {
    std::vector<Vec<Rat>> pts;
    for (int i = 0; i < 6; ++i)
      pts.push_back({rng.rational(Rat(-5), Rat(5)), rng.rational(Rat(-5), Rat(5))});
    PointSet back = pointset_from_json(pointset_to_json(2, pts));
    CHECK(back.points == pts);
  }
}

TEST_CASE("coordinate forms: integers, floats, rational strings") {
  Json j = parse_json_text(R"({"dim":2,"vertices":[[1, "1/3"],[0.25, -2]]})");
  PointSet ps = pointset_from_json(j);
  CHECK(ps.points[0][1] == make_rat(1, 3));
  CHECK(ps.points[1][0] == make_rat(1, 4));
  CHECK_THROWS_AS(pointset_from_json(parse_json_text(R"({"dim":2,"vertices":[[1]]})")), Error);
  CHECK_THROWS_AS(parse_json_text("{nope"), Error);
}

TEST_CASE("cli: exact mean for the bundled triangle") {
  RunResult r = run_cli("na-exact " + data("triangle.json"));
  CHECK(r.exit_code == 0);
  Json j = parse_json_text(r.out);
  CHECK(j["na"] == "3");
  CHECK(j["via_eq0"] == "3");
  CHECK(j["via_t1"] == "3");
}

TEST_CASE("cli: malformed input exits 2 with a parse_error kind") {
  std::string bad = write_temp("bad.json", "{not json");
  RunResult r = run_cli("na-exact " + bad);
  CHECK(r.exit_code == 2);
}

TEST_CASE("cli: position check drives the exit code") {
  CHECK(run_cli("check-position " + data("triangle.json")).exit_code == 0);
  RunResult sq = run_cli("check-position " + data("square.json"));
  CHECK(sq.exit_code == 1);
  Json j = parse_json_text(sq.out);
  CHECK(j["holds"] == false);
  CHECK(j["witnesses"].size() == 4);
  // strong variant
  RunResult st = run_cli("check-position " + data("gauge_pairs/pair1_body.json") + " --with " +
                         data("gauge_pairs/pair1_gauge.json"));
  CHECK(st.exit_code == 0);
}

TEST_CASE("cli: float mode is refused where exactness is mandatory") {
  RunResult r = run_cli("check-position " + data("triangle.json") + " --mode float");
  CHECK(r.exit_code == 2);
  RunResult r2 = run_cli("na-exact " + data("triangle.json") + " --mode float");
  CHECK(r2.exit_code == 2);
}

TEST_CASE("cli: seeded Monte Carlo is reproducible byte for byte") {
  std::string args = "na-montecarlo " + data("quad_a.json") + " --samples 20000 --seed 42";
  RunResult a = run_cli(args), b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  Json j = parse_json_text(a.out);
  double mean = j["mean"].get<double>(), se = j["stderr"].get<double>();
  CHECK(std::fabs(mean - 27.0 / 11.0) <= 3 * se);
  // seed is mandatory
  CHECK(run_cli("na-montecarlo " + data("quad_a.json") + " --samples 1000").exit_code != 0);
}

TEST_CASE("cli: svg scene for a polygon") {
  RunResult r =
      run_cli("na-exact " + data("quad_a.json") + " --format svg --point 1,1/2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("<svg") != std::string::npos);
  CHECK(r.out.find("polygon") != std::string::npos);
  CHECK(r.out.find("line") != std::string::npos);  // diameters through the point
  RunResult t = run_cli("triangulate " + data("triangle.json") + " --format svg");
  CHECK(t.exit_code == 0);
  CHECK(t.out.find("<svg") != std::string::npos);
}

TEST_CASE("cli: triangulation report") {
  RunResult r = run_cli("triangulate " + data("triangle.json"));
  CHECK(r.exit_code == 0);
  Json j = parse_json_text(r.out);
  CHECK(j["triangles"].size() == 6);
  CHECK(j["area_sum"] == j["difference_body_area"]);
}

TEST_CASE("cli: volume polynomial and the analytic high-dimensional simplex") {
  RunResult r = run_cli("volume-poly " + data("tetrahedron.json"));
  CHECK(r.exit_code == 0);
  Json j = parse_json_text(r.out);
  CHECK(j["integral"] == "1/3");

  std::string s4 = write_temp("s4.json",
                              R"({"dim":4,"vertices":[[0,0,0,0],[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]})");
  RunResult r4 = run_cli("volume-poly " + s4);
  CHECK(r4.exit_code == 0);
  Json j4 = parse_json_text(r4.out);
  CHECK(j4["integral"] == "2/15");

  std::string sbad = write_temp("p4.json",
                                R"({"dim":4,"vertices":[[0,0,0,0],[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1],[1,1,1,1]]})");
  CHECK(run_cli("volume-poly " + sbad).exit_code == 2);
}

TEST_CASE("cli: rs-check emits the documented keys") {
  RunResult r = run_cli("rs-check " + data("quad_rs.json"));
  CHECK(r.exit_code == 0);
  Json j = parse_json_text(r.out);
  CHECK(j["rs_lower_ok"] == true);
  CHECK(j["rs_upper_ok"] == true);
  CHECK(j["lower_gap"] == "1/3");
  CHECK(j["upper_gap"] == "2/3");
}

TEST_CASE("cli: gauge query in both arithmetic modes") {
  std::string base = "gauge --body " + data("gauge_pairs/pair1_body.json") + " --gauge " +
                     data("gauge_pairs/pair1_gauge.json") + " --point 8,8";
  RunResult e = run_cli(base);
  CHECK(e.exit_code == 0);
  Json je = parse_json_text(e.out);
  RunResult f = run_cli(base + " --mode float");
  CHECK(f.exit_code == 0);
  Json jf = parse_json_text(f.out);
  CHECK(je["d_float"].get<double>() == doctest::Approx(jf["d"].get<double>()).epsilon(1e-6));
}

TEST_CASE("cli: bundle, measures and thm2 reports") {
  std::string pair = " --body " + data("gauge_pairs/pair3_body.json") + " --gauge " +
                     data("gauge_pairs/pair3_gauge.json");
  RunResult b = run_cli("bundle" + pair);
  CHECK(b.exit_code == 0);
  Json jb = parse_json_text(b.out);
  CHECK(jb["pieces"].size() >= 6);
  RunResult m = run_cli("measures" + pair);
  CHECK(m.exit_code == 0);
  Json jm = parse_json_text(m.out);
  CHECK(jm["body_total"].get<double>() ==
        doctest::Approx(jm["body_perimeter"].get<double>()).epsilon(1e-9));
  RunResult t = run_cli("thm2-check " + data("quad_b.json"));
  CHECK(t.exit_code == 0);
  Json jt = parse_json_text(t.out);
  CHECK(jt["na"] == "9/4");
}

TEST_CASE("cli: counterexample table") {
  RunResult r = run_cli("counterexample --depth 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("n,ratio,bound,pass\n", 0) == 0);
  CHECK(r.out.find("3,") != std::string::npos);
  RunResult j = run_cli("counterexample --depth 4 --format json");
  CHECK(j.exit_code == 0);
  Json jj = parse_json_text(j.out);
  CHECK(jj["probes"].size() == 1);
  CHECK(jj["probes"][0]["pass"] == true);
}

TEST_CASE("cli: exact reports are byte-identical across runs") {
  std::string args = "na-exact " + data("quad_c.json");
  RunResult a = run_cli(args), b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  Json j = parse_json_text(a.out);
  CHECK(j["na"] == "23/9");
}

TEST_CASE("cli: measures accepts explicit arc boundaries") {
  RunResult r = run_cli("measures --body " + data("gauge_pairs/pair1_body.json") + " --gauge " +
                        data("gauge_pairs/pair1_gauge.json") +
                        " --arcs \"1,0;1,1;0,1;-1,0;0,-1\"");
  CHECK(r.exit_code == 0);
  Json j = parse_json_text(r.out);
  CHECK(j["arc_count"] == 5);
  double total = 0;
  for (const auto& v : j["body_bundle"]) total += v.get<double>();
  CHECK(total == doctest::Approx(j["body_perimeter"].get<double>()).epsilon(1e-9));
}
