// Command-line front end: JSON polytopes in, JSON/CSV/SVG reports out.
// Exit codes: 0 success, 1 failed verification, 2 input/usage error.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "affdia/acceptance.hpp"
#include "affdia/counterexample.hpp"
#include "affdia/diameters.hpp"
#include "affdia/gauge.hpp"
#include "affdia/io.hpp"
#include "affdia/minkowski.hpp"
#include "affdia/svg.hpp"

namespace {

using namespace affdia;

int exit_code_for(Err kind) {
  switch (kind) {
    case Err::ParseError:
    case Err::InvalidInput:
    case Err::DimensionMismatch:
    case Err::NotSupported:
    case Err::DegenerateInput:
      return 2;
    default:
      return 1;
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  require(static_cast<bool>(f), Err::InvalidInput, "cannot write '" + out_path + "'");
  f << text;
}

Json witnesses_json(const PositionReport& rep) {
  Json ws = Json::array();
  for (const auto& w : rep.witnesses) {
    Json jw;
    jw["direction"] = rat_vec_to_json(w.direction);
    jw["dim_first"] = w.dim_first;
    jw["dim_second"] = w.dim_second;
    jw["dim_sum_face"] = w.dim_sum;
    ws.push_back(jw);
  }
  return ws;
}

struct Options {
  std::string input, body_path, gauge_path, point, out, format, mode = "exact", arcs;
  long long samples = 0;
  uint64_t seed = 0;
  double eps = 1e-9;
  int depth = 6;
  std::string data_dir = "data";
};

void require_exact_mode(const Options& opt, const char* cmd) {
  require(opt.mode == "exact", Err::InvalidInput,
          std::string(cmd) + " runs in exact mode only (float tolerances could flip a "
                             "face-dimension or equality test)");
}

int dispatch(const std::string& cmd, const Options& opt) {
  if (cmd == "check-position") {
    require_exact_mode(opt, "check-position");
    PositionReport rep;
    if (opt.gauge_path.empty()) {
      rep = general_relative_position(load_polytope(opt.input));
    } else {
      rep = strongly_general_relative_position(load_polytope(opt.input), load_polytope(opt.gauge_path));
    }
    Json j;
    j["holds"] = rep.holds;
    j["witnesses"] = witnesses_json(rep);
    emit(j.dump(1) + "\n", opt.out);
    return rep.holds ? 0 : 1;
  }

  if (cmd == "na-exact") {
    require_exact_mode(opt, "na-exact");
    Polytope<Rat> p = load_polytope(opt.input);
    std::vector<FacetPair> pairs = facet_pairs(p);
    DiameterCount dc = na_exact(p, &pairs);
    if (opt.format == "svg") {
      require(p.dim == 2, Err::NotSupported, "SVG output is planar only");
      Polytope<Rat> dp = difference_body(p);
      Vec<Rat> pt;
      const Vec<Rat>* ptp = nullptr;
      if (!opt.point.empty()) {
        pt = point_from_string(opt.point);
        ptp = &pt;
      }
      emit(render_diameter_scene(p, pairs, dp, ptp), opt.out);
      return 0;
    }
    Json j;
    j["na"] = rat_to_string(dc.value);
    j["via_eq0"] = rat_to_string(dc.via_slab_sum);
    j["via_t1"] = rat_to_string(dc.via_integral);
    if (!opt.point.empty()) {
      Vec<Rat> z = point_from_string(opt.point);
      j["na_point"] = na_point(p, z, &pairs);
    }
    emit(j.dump(1) + "\n", opt.out);
    return 0;
  }

  if (cmd == "na-montecarlo") {
    Polytope<Rat> p = load_polytope(opt.input);
    MonteCarloResult mc = na_montecarlo(p, opt.samples, opt.seed, opt.eps);
    Json j;
    j["mean"] = mc.mean;
    j["stderr"] = mc.stderr_;
    j["samples"] = mc.samples;
    j["seed"] = opt.seed;
    j["exceptional_resamples"] = mc.exceptional;
    emit(j.dump(1) + "\n", opt.out);
    return 0;
  }

  if (cmd == "triangulate") {
    require_exact_mode(opt, "triangulate");
    Polytope<Rat> p = load_polytope(opt.input);
    std::vector<Polytope<Rat>> tris = planar_triangulation(p);
    Polytope<Rat> dp = difference_body(p);
    if (opt.format == "svg") {
      emit(render_triangulation(tris, dp), opt.out);
      return 0;
    }
    Json j;
    Json arr = Json::array();
    Rat total = 0;
    for (const auto& t : tris) {
      Json tv = Json::array();
      for (const auto& v : t.verts) tv.push_back(rat_vec_to_json(v));
      arr.push_back(tv);
      total += t.volume();
    }
    j["triangles"] = arr;
    j["area_sum"] = rat_to_string(total);
    j["difference_body_area"] = rat_to_string(dp.volume());
    emit(j.dump(1) + "\n", opt.out);
    return 0;
  }

  if (cmd == "volume-poly") {
    require_exact_mode(opt, "volume-poly");
    PointSet ps = load_pointset(opt.input);
    VolumePolynomial vp;
    if (ps.dim <= 3) {
      vp = volume_polynomial(convex_hull(ps.points, ps.dim));
    } else {
      require(ps.points.size() == static_cast<size_t>(ps.dim) + 1, Err::NotSupported,
              "dim >= 4 is supported for simplices only (analytic identities)");
      vp = simplex_volume_polynomial(ps.points);
    }
    Json j;
    j["n"] = vp.n;
    Json coeffs = Json::array(), mixed = Json::array();
    for (const auto& c : vp.coeffs) coeffs.push_back(rat_to_string(c));
    for (const auto& m : vp.mixed_volumes) mixed.push_back(rat_to_string(m));
    j["coeffs"] = coeffs;
    j["mixed_volumes"] = mixed;
    j["integral"] = rat_to_string(integral_of(vp));
    emit(j.dump(1) + "\n", opt.out);
    return 0;
  }

  if (cmd == "rs-check") {
    require_exact_mode(opt, "rs-check");
    RsReport r = rogers_shephard_check(load_polytope(opt.input));
    Json j;
    j["volume"] = rat_to_string(r.volume);
    j["integral"] = rat_to_string(r.integral);
    j["rs_lower_ok"] = r.lower_ok;
    j["rs_upper_ok"] = r.upper_ok;
    j["lower_gap"] = rat_to_string(r.lower_gap);
    j["upper_gap"] = rat_to_string(r.upper_gap);
    emit(j.dump(1) + "\n", opt.out);
    return 0;
  }

  if (cmd == "gauge") {
    Polytope<Rat> k = load_polytope(opt.body_path);
    Polytope<Rat> b = load_polytope(opt.gauge_path);
    Vec<Rat> x = point_from_string(opt.point);
    Json j;
    if (opt.mode == "float") {
      GaugeResult<double> g =
          gauge_distance(to_double_polytope(k), to_double_polytope(b), vec_to_double(x), false, opt.eps);
      j["d"] = g.d;
      j["p"] = g.p;
      j["u"] = g.u;
    } else {
      GaugeResult<Rat> g = gauge_distance(k, b, x);
      j["d"] = rat_to_string(g.d);
      j["p"] = rat_vec_to_json(g.p);
      j["u"] = rat_vec_to_json(g.u);
      j["d_float"] = to_double(g.d);
    }
    emit(j.dump(1) + "\n", opt.out);
    return 0;
  }

  if (cmd == "bundle") {
    require_exact_mode(opt, "bundle");
    Polytope<Rat> k = load_polytope(opt.body_path);
    Polytope<Rat> b = load_polytope(opt.gauge_path);
    Json arr = Json::array();
    for (const auto& pc : normal_bundle(k, b)) {
      Json jp;
      jp["kind"] = pc.kind == PieceKind::EdgeOfK ? "edge_of_body" : "edge_of_gauge";
      jp["curvature"] = pc.kind == PieceKind::EdgeOfK ? "0" : "inf";
      jp["normal"] = rat_vec_to_json(pc.normal);
      jp["length"] = pc.length;
      jp["start"] = Json::array({rat_vec_to_json(pc.start.first), rat_vec_to_json(pc.start.second)});
      jp["end"] = Json::array({rat_vec_to_json(pc.end.first), rat_vec_to_json(pc.end.second)});
      arr.push_back(jp);
    }
    Json j;
    j["pieces"] = arr;
    emit(j.dump(1) + "\n", opt.out);
    return 0;
  }

  if (cmd == "measures") {
    require_exact_mode(opt, "measures");
    Polytope<Rat> k = load_polytope(opt.body_path);
    Polytope<Rat> b = load_polytope(opt.gauge_path);
    std::vector<Arc> arcs;
    if (opt.arcs.empty()) {
      arcs = quadrant_arcs();
    } else {
      std::vector<Vec<Rat>> dirs;
      std::stringstream ss(opt.arcs);
      std::string part;
      while (std::getline(ss, part, ';')) dirs.push_back(point_from_string(part));
      require(dirs.size() >= 1, Err::ParseError, "need at least one arc boundary");
      for (size_t i = 0; i < dirs.size(); ++i) arcs.push_back({dirs[i], dirs[(i + 1) % dirs.size()]});
    }
    MeasureReport mr = length_measures(k, b, arcs);
    Json j;
    j["arc_count"] = arcs.size();
    j["body_bundle"] = mr.k_bundle;
    j["body_direct"] = mr.k_direct;
    j["gauge_bundle"] = mr.b_bundle;
    j["gauge_direct"] = mr.b_direct;
    j["body_total"] = mr.k_total;
    j["gauge_total"] = mr.b_total;
    j["body_perimeter"] = polygon_perimeter(k);
    j["gauge_perimeter"] = polygon_perimeter(b);
    emit(j.dump(1) + "\n", opt.out);
    return 0;
  }

  if (cmd == "thm2-check") {
    require_exact_mode(opt, "thm2-check");
    PlanarBoundReport r = planar_bound_check(load_polytope(opt.input));
    Json j;
    j["na"] = rat_to_string(r.na);
    j["area_ratio"] = rat_to_string(r.area_ratio);
    j["lower_ok"] = r.lower_ok;
    j["upper_ok"] = r.upper_ok;
    j["is_triangle"] = r.is_triangle;
    j["triangle_iff_ok"] = r.triangle_iff_ok;
    emit(j.dump(1) + "\n", opt.out);
    return 0;
  }

  if (cmd == "counterexample") {
    require_exact_mode(opt, "counterexample");
    CounterexampleInstance inst = build_bodies(opt.depth);
    std::vector<ProbeResult> probes;
    for (int n = 3; n + 1 <= inst.depth; n += 2) probes.push_back(probe_ratio(inst, n));
    Json j;
    j["depth"] = inst.depth;
    j["body"] = polytope_to_json(inst.body);
    j["gauge"] = polytope_to_json(inst.gauge);
    j["gauge_shift"] = rat_vec_to_json(inst.gauge_shift);
    Json arr = Json::array();
    for (const auto& pr : probes) {
      Json jp;
      jp["n"] = pr.n;
      jp["lambda"] = rat_to_string(pr.lambda);
      jp["ratio"] = pr.ratio;
      jp["bound"] = pr.bound;
      jp["ratio_sq"] = rat_to_string(pr.ratio_sq);
      jp["bound_sq"] = rat_to_string(pr.bound_sq);
      jp["pass"] = pr.ratio_sq > pr.bound_sq;
      arr.push_back(jp);
    }
    j["probes"] = arr;
    if (opt.format == "json") {
      emit(j.dump(1) + "\n", opt.out);
      return 0;
    }
    // CSV table on stdout; the full instance dump goes to --out when given
    std::ostringstream os;
    os << "n,ratio,bound,pass\n";
    for (const auto& pr : probes)
      os << pr.n << "," << pr.ratio << "," << pr.bound << "," << (pr.ratio_sq > pr.bound_sq ? 1 : 0)
         << "\n";
    std::cout << os.str();
    if (!opt.out.empty()) emit(j.dump(1) + "\n", opt.out);
    return 0;
  }

  if (cmd == "corpus") {
    require_exact_mode(opt, "corpus");
    std::vector<CriterionResult> rs = run_acceptance(opt.data_dir);
    bool all = true;
    for (const auto& r : rs) {
      std::cout << format_criterion_line(r) << "\n";
      all = all && r.pass;
    }
    return all ? 0 : 1;
  }

  fail(Err::InvalidInput, "unknown command");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"affine-diameter and gauge-projection toolkit for convex polytopes"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--mode", opt.mode, "arithmetic mode: exact|float")->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--eps", opt.eps, "float-mode tolerance");
    sub->add_option("--out", opt.out, "write output to a file instead of stdout");
    sub->add_option("--format", opt.format, "output format: json|csv|svg")
        ->check(CLI::IsMember({"json", "csv", "svg"}));
  };

  auto* pos = app.add_subcommand("check-position", "general (or strong) relative position report");
  pos->add_option("input", opt.input, "polytope JSON")->required();
  pos->add_option("--with", opt.gauge_path, "second body: check strongly general relative position");
  add_common(pos);

  auto* nae = app.add_subcommand("na-exact", "exact mean number of affine diameters, both paths");
  nae->add_option("input", opt.input, "polytope JSON")->required();
  nae->add_option("--point", opt.point, "also count diameters through this interior point");
  add_common(nae);

  auto* nam = app.add_subcommand("na-montecarlo", "seeded Monte Carlo estimate of the mean");
  nam->add_option("input", opt.input, "polytope JSON")->required();
  nam->add_option("--samples", opt.samples, "sample count")->required();
  nam->add_option("--seed", opt.seed, "PRNG seed (mandatory for reproducibility)")->required();
  add_common(nam);

  auto* tri = app.add_subcommand("triangulate", "slab triangulation of the difference body");
  tri->add_option("input", opt.input, "polygon JSON")->required();
  add_common(tri);

  auto* vp = app.add_subcommand("volume-poly", "volume polynomial of (1-t)P - tP");
  vp->add_option("input", opt.input, "polytope JSON")->required();
  add_common(vp);

  auto* rs = app.add_subcommand("rs-check", "difference-body volume bounds");
  rs->add_option("input", opt.input, "polytope JSON")->required();
  add_common(rs);

  auto* ga = app.add_subcommand("gauge", "gauge distance, projection and normal of a point");
  ga->add_option("--body", opt.body_path, "body K JSON")->required();
  ga->add_option("--gauge", opt.gauge_path, "gauge body B JSON")->required();
  ga->add_option("--point", opt.point, "query point 'x,y[,z]'")->required();
  add_common(ga);

  auto* bu = app.add_subcommand("bundle", "normal bundle of a polygon pair");
  bu->add_option("--body", opt.body_path, "body K JSON")->required();
  bu->add_option("--gauge", opt.gauge_path, "gauge body B JSON")->required();
  add_common(bu);

  auto* me = app.add_subcommand("measures", "length measures via the bundle vs direct binning");
  me->add_option("--body", opt.body_path, "body K JSON")->required();
  me->add_option("--gauge", opt.gauge_path, "gauge body B JSON")->required();
  me->add_option("--arcs", opt.arcs, "arc boundaries 'x1,y1;x2,y2;...' (default: quadrants)");
  add_common(me);

  auto* t2 = app.add_subcommand("thm2-check", "planar mean-count bounds and triangle characterization");
  t2->add_option("input", opt.input, "polygon JSON")->required();
  add_common(t2);

  auto* ce = app.add_subcommand("counterexample", "3D non-Lipschitz projection instance");
  ce->add_option("--depth", opt.depth, "truncation depth N >= 3")->required();
  add_common(ce);

  auto* co = app.add_subcommand("corpus", "run the acceptance suite over the bundled corpus");
  co->add_option("--data", opt.data_dir, "corpus directory (default: data)");
  add_common(co);

  CLI11_PARSE(app, argc, argv);
  std::string cmd = app.get_subcommands().front()->get_name();
  if (opt.format.empty()) opt.format = cmd == "counterexample" ? "csv" : "json";

  try {
    return dispatch(cmd, opt);
  } catch (const affdia::Error& e) {
    affdia::Json err;
    err["error"] = {{"kind", err_name(e.kind())}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    affdia::Json err;
    err["error"] = {{"kind", "internal_error"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  }
}
