#pragma once

// Acceptance suite over the bundled corpus: every check is an exact identity,
// an inequality with pinned equality cases, or a seeded statistical test. One line
// per criterion; used both by the `corpus` CLI command and the acceptance
// test binary.

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "affdia/counterexample.hpp"
#include "affdia/diameters.hpp"
#include "affdia/gauge.hpp"
#include "affdia/io.hpp"
#include "affdia/minkowski.hpp"

namespace affdia {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  std::string detail;
};

namespace detail_acc {

struct Corpus {
  std::vector<std::pair<std::string, Polytope<Rat>>> polygons;   // general position
  std::vector<std::pair<std::string, Polytope<Rat>>> tetrahedra; // general position
  std::vector<std::pair<std::string, Polytope<Rat>>> solids5;    // non-simplex 3D bodies
  Polytope<Rat> triangle, tetrahedron, square, hex_symmetric, quad_a;
  std::vector<std::pair<Polytope<Rat>, Polytope<Rat>>> gauge_pairs;
};

inline Polytope<Rat> random_polygon(Rng& rng) {
  for (;;) {
    std::vector<Vec<Rat>> pts;
    int k = 5 + static_cast<int>(rng.below(5));
    for (int i = 0; i < k; ++i)
      pts.push_back({Rat(rng.integer(-20, 20)), Rat(rng.integer(-20, 20))});
    try {
      Polytope<Rat> p = convex_hull(pts, 2);
      if (general_relative_position(p).holds) return p;
    } catch (const Error&) {
    }
  }
}

inline Polytope<Rat> random_tetra(Rng& rng) {
  for (;;) {
    std::vector<Vec<Rat>> pts;
    for (int i = 0; i < 4; ++i)
      pts.push_back({Rat(rng.integer(-9, 9)), Rat(rng.integer(-9, 9)), Rat(rng.integer(-9, 9))});
    try {
      Polytope<Rat> p = convex_hull(pts, 3);
      if (general_relative_position(p).holds) return p;
    } catch (const Error&) {
    }
  }
}

inline Polytope<Rat> random_solid5(Rng& rng) {
  for (;;) {
    std::vector<Vec<Rat>> pts;
    for (int i = 0; i < 5; ++i)
      pts.push_back({Rat(rng.integer(-9, 9)), Rat(rng.integer(-9, 9)), Rat(rng.integer(-9, 9))});
    try {
      Polytope<Rat> p = convex_hull(pts, 3);
      if (p.vertex_count() == 5 && general_relative_position(p).holds) return p;
    } catch (const Error&) {
    }
  }
}

inline Corpus load_corpus(const std::string& dir) {
  Corpus c;
  c.triangle = load_polytope(dir + "/triangle.json");
  c.tetrahedron = load_polytope(dir + "/tetrahedron.json");
  c.square = load_polytope(dir + "/square.json");
  c.hex_symmetric = load_polytope(dir + "/hex_symmetric.json");
  c.quad_a = load_polytope(dir + "/quad_a.json");

  c.polygons.push_back({"triangle", c.triangle});
  for (const char* n : {"quad_a", "quad_b", "quad_c", "hex_perturbed"})
    c.polygons.push_back({n, load_polytope(dir + "/" + n + ".json")});
  Rng prng(1234);
  for (int i = 0; i < 20; ++i)
    c.polygons.push_back({"rand_poly_" + std::to_string(i), random_polygon(prng)});

  c.tetrahedra.push_back({"tetrahedron", c.tetrahedron});
  c.tetrahedra.push_back({"tetra_a", load_polytope(dir + "/tetra_a.json")});
  c.tetrahedra.push_back({"tetra_b", load_polytope(dir + "/tetra_b.json")});
  Rng trng(99);
  for (int i = 0; i < 8; ++i)
    c.tetrahedra.push_back({"rand_tetra_" + std::to_string(i), random_tetra(trng)});
  for (int i = 0; i < 2; ++i)
    c.solids5.push_back({"rand_solid5_" + std::to_string(i), random_solid5(trng)});

  for (int i = 1; i <= 5; ++i) {
    std::string base = dir + "/gauge_pairs/pair" + std::to_string(i);
    c.gauge_pairs.push_back({load_polytope(base + "_body.json"), load_polytope(base + "_gauge.json")});
  }
  return c;
}

}  // namespace detail_acc

inline std::vector<CriterionResult> run_acceptance(const std::string& data_dir) {
  using Clock = std::chrono::steady_clock;
  std::vector<CriterionResult> results;
  detail_acc::Corpus corpus = detail_acc::load_corpus(data_dir);

  auto run = [&](int id, const std::string& name, double budget_s,
                 const std::function<std::string()>& body) {
    CriterionResult r;
    r.id = id;
    r.name = name;
    auto t0 = Clock::now();
    try {
      r.detail = body();
      r.pass = true;
    } catch (const std::exception& e) {
      r.detail = e.what();
      r.pass = false;
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (r.pass && budget_s > 0 && r.seconds >= budget_s) {
      r.pass = false;
      r.detail += " [runtime budget exceeded]";
    }
    results.push_back(r);
  };

  run(1, "simplex equality: mean 3 for triangles, 7 for tetrahedra, both paths bit-equal", 0, [&] {
    auto one = [&](const Polytope<Rat>& p, long long expect) {
      auto t0 = Clock::now();
      DiameterCount dc = na_exact(p);
      double dt = std::chrono::duration<double>(Clock::now() - t0).count();
      require(dc.value == expect && dc.via_slab_sum == dc.via_integral, Err::BoundViolated,
              "simplex mean mismatch");
      require(dt < 1.0, Err::BoundViolated, "single simplex run exceeded 1 s");
    };
    one(corpus.triangle, 3);
    // affine image of the triangle
    std::vector<Vec<Rat>> tri2;
    for (const auto& v : corpus.triangle.verts)
      tri2.push_back({v[0] * 3 + v[1] + 1, v[0] - v[1] * 2 + 5});
    one(convex_hull(tri2, 2), 3);
    one(corpus.tetrahedron, 7);
    for (const auto& [name, t] : corpus.tetrahedra) one(t, 7);
    return std::string("triangles -> 3, tetrahedra -> 7, exact");
  });

  run(2, "bounds n < mean <= 2^n - 1 over random corpus, equality only on simplices", 30.0, [&] {
    int checked = 0;
    for (const auto& [name, p] : corpus.polygons) {
      Rat na = na_exact(p).value;
      require(na > 2 && na <= 3, Err::BoundViolated, name + ": planar bound violated");
      require((na == 3) == (p.vertex_count() == 3), Err::BoundViolated,
              name + ": equality not characterizing triangles");
      ++checked;
    }
    for (const auto& [name, p] : corpus.tetrahedra) {
      Rat na = na_exact(p).value;
      require(na > 3 && na == 7, Err::BoundViolated, name + ": simplex bound violated");
      ++checked;
    }
    for (const auto& [name, p] : corpus.solids5) {
      Rat na = na_exact(p).value;
      require(na > 3 && na < 7, Err::BoundViolated, name + ": non-simplex must be strict");
      ++checked;
    }
    require(corpus.polygons.size() >= 20 && corpus.tetrahedra.size() >= 10, Err::InternalError,
            "corpus too small");
    return std::to_string(checked) + " bodies within (n, 2^n-1], equality iff simplex";
  });

  run(3, "planar identity and difference-body triangulation", 0, [&] {
    for (const auto& [name, p] : corpus.polygons) {
      Polytope<Rat> dp = difference_body(p);
      Rat dp_area = dp.volume();
      require(na_exact(p).value == dp_area / (p.volume() * 2), Err::FormulaMismatch,
              name + ": planar identity failed");
      std::vector<Polytope<Rat>> tris = planar_triangulation(p);
      require(tris.size() == 2 * static_cast<size_t>(p.vertex_count()), Err::BoundViolated,
              name + ": triangle count");
      Rat total = 0;
      for (const auto& t : tris) total += t.volume();
      require(total == dp_area, Err::BoundViolated, name + ": triangulation area sum");
      for (size_t i = 0; i < tris.size(); ++i)
        for (size_t j = i + 1; j < tris.size(); ++j)
          require(sgn(convex_intersection_area(tris[i], tris[j])) == 0, Err::BoundViolated,
                  name + ": triangles overlap");
    }
    return std::to_string(corpus.polygons.size()) + " polygons tile their difference bodies";
  });

  run(4, "Monte Carlo oracle at 1e5 samples, seed 42", 60.0, [&] {
    std::ostringstream os;
    auto one = [&](const char* name, const Polytope<Rat>& p) {
      Rat exact = na_exact(p).value;
      MonteCarloResult mc = na_montecarlo(p, 100000, 42);
      double dev = std::fabs(mc.mean - to_double(exact));
      require(dev <= 3 * mc.stderr_ + 1e-12, Err::BoundViolated,
              std::string(name) + ": Monte Carlo mean outside 3 sigma");
      os << name << " mean=" << mc.mean << " +-" << mc.stderr_ << "; ";
      return mc;
    };
    MonteCarloResult tri = one("triangle", corpus.triangle);
    require(tri.stderr_ < 0.02, Err::BoundViolated, "triangle stderr too large");
    one("tetrahedron", corpus.tetrahedron);
    one("quad_a", corpus.quad_a);
    return os.str();
  });

  run(5, "difference-body volume bounds with equality characterizations", 0, [&] {
    auto gaps = [&](const Polytope<Rat>& p) { return rogers_shephard_check(p); };
    require(gaps(corpus.square).lower_gap == 0, Err::BoundViolated, "square lower gap");
    require(gaps(corpus.hex_symmetric).lower_gap == 0, Err::BoundViolated, "sym hexagon lower gap");
    require(gaps(corpus.triangle).upper_gap == 0, Err::BoundViolated, "triangle upper gap");
    require(gaps(corpus.tetrahedron).upper_gap == 0, Err::BoundViolated, "tetrahedron upper gap");
    int strict = 0;
    for (const auto& [name, p] : corpus.polygons) {
      if (p.vertex_count() == 3) continue;
      RsReport r = gaps(p);
      require(sgn(r.lower_gap) > 0 && sgn(r.upper_gap) > 0, Err::BoundViolated,
              name + ": expected strict gaps");
      ++strict;
    }
    for (const auto& [name, p] : corpus.solids5) {
      RsReport r = gaps(p);
      require(sgn(r.lower_gap) > 0 && sgn(r.upper_gap) > 0, Err::BoundViolated,
              name + ": expected strict gaps");
      ++strict;
    }
    return "equalities exact, " + std::to_string(strict) + " strict bodies";
  });

  run(6, "width-integral identity V(DK,K) + V(DK,-K) = V2(DK) on every corpus polygon", 0, [&] {
    for (const auto& [name, p] : corpus.polygons) {
      MixedVolumeIdentity mi = width_identity_check(p);
      require(mi.ok, Err::MeasureMismatch, name + ": width identity failed");
    }
    return std::to_string(corpus.polygons.size()) + " polygons, exact equality";
  });

  run(7, "planar bounds 1 <= mean <= 3 with value 3 iff triangle; perturbed hexagon in (2,3]", 0, [&] {
    for (const auto& [name, p] : corpus.polygons) planar_bound_check(p);
    Polytope<Rat> hex = load_polytope(data_dir + "/hex_perturbed.json");
    Rat na = na_exact(hex).value;
    require(na > 2 && na <= 3, Err::BoundViolated, "perturbed hexagon out of (2,3]");
    require(na == make_rat(65, 32), Err::BoundViolated, "perturbed hexagon regression value");
    return "all polygons pass; perturbed hexagon mean = 65/32";
  });

  run(8, "projection Lipschitz quotients stay below 1/sin(alpha0) on 5 pinned pairs", 0, [&] {
    std::ostringstream os;
    for (size_t i = 0; i < corpus.gauge_pairs.size(); ++i) {
      const auto& [k, b] = corpus.gauge_pairs[i];
      LipschitzBound lb = lipschitz_bound(b);
      ProbeReport pr = lipschitz_probe(k, b, 10000, 777 + i);
      require(pr.max_ratio <= lb.value + 1e-9, Err::BoundViolated,
              "pair " + std::to_string(i + 1) + ": probe exceeded the certified bound");
      os << "pair" << i + 1 << " " << pr.max_ratio << "<=" << lb.value << "; ";
    }
    return os.str();
  });

  run(9, "length measures: bundle integration equals direct edge binning, exact", 0, [&] {
    std::vector<Arc> fine;
    std::vector<Vec<Rat>> dirs = {{Rat(1), Rat(0)},  {Rat(2), Rat(1)},  {Rat(0), Rat(1)},
                                  {Rat(-1), Rat(1)}, {Rat(-1), Rat(0)}, {Rat(-1), Rat(-2)},
                                  {Rat(0), Rat(-1)}, {Rat(1), Rat(-1)}};
    for (size_t i = 0; i < dirs.size(); ++i) fine.push_back({dirs[i], dirs[(i + 1) % dirs.size()]});
    for (size_t i = 0; i < corpus.gauge_pairs.size(); ++i) {
      const auto& [k, b] = corpus.gauge_pairs[i];
      for (const auto& arcs : {quadrant_arcs(), fine}) {
        MeasureReport mr = length_measures(k, b, arcs);
        require(std::fabs(mr.k_total - polygon_perimeter(k)) <= 1e-9 * (1 + mr.k_total),
                Err::MeasureMismatch, "total mass of K differs from its perimeter");
        require(std::fabs(mr.b_total - polygon_perimeter(b)) <= 1e-9 * (1 + mr.b_total),
                Err::MeasureMismatch, "total mass of B differs from its perimeter");
      }
    }
    return "5 pairs x 2 partitions, per-arc edge multisets identical";
  });

  run(10, "3D counterexample at depth 10: quotients beat (n+1)/(2 sqrt 13), increase, pass 1", 120.0, [&] {
    CounterexampleInstance inst = build_bodies(10);
    std::ostringstream os;
    Rat prev = 0;
    ProbeResult last;
    for (int n : {3, 5, 7, 9}) {
      ProbeResult pr = probe_ratio(inst, n);  // exact bound comparisons inside
      require(pr.ratio_sq > prev, Err::BoundViolated, "quotient sequence not increasing");
      prev = pr.ratio_sq;
      last = pr;
      os << "n=" << n << " ratio=" << pr.ratio << ">" << pr.bound << "; ";
    }
    require(last.ratio_sq > 1, Err::BoundViolated, "depth-9 quotient should exceed 1");
    return os.str();
  });

  return results;
}

inline std::string format_criterion_line(const CriterionResult& r) {
  std::ostringstream os;
  os << "criterion " << r.id << " " << (r.pass ? "PASS" : "FAIL") << " (" << r.seconds << "s): "
     << r.name;
  if (!r.detail.empty()) os << " -- " << r.detail;
  return os.str();
}

}  // namespace affdia
