#pragma once

// Minimal deterministic SVG emission for the planar commands: fixed 800x800
// canvas, world viewport fitted to a bounding box, y axis flipped.

#include <cstdio>
#include <string>
#include <vector>

#include "affdia/diameters.hpp"
#include "affdia/polytope.hpp"

namespace affdia {

class SvgCanvas {
 public:
  SvgCanvas(double x0, double y0, double x1, double y1) {
    double margin = 0.05 * std::max(x1 - x0, y1 - y0);
    x0_ = x0 - margin;
    y0_ = y0 - margin;
    scale_ = 800.0 / std::max(x1 - x0 + 2 * margin, y1 - y0 + 2 * margin);
    ymax_ = y1 + margin;
  }

  void polygon(const std::vector<Vec<double>>& pts, const std::string& fill, double opacity,
               const std::string& stroke) {
    body_ += "<polygon points=\"";
    for (const auto& p : pts) body_ += fmt(px(p[0])) + "," + fmt(py(p[1])) + " ";
    body_ += "\" fill=\"" + fill + "\" fill-opacity=\"" + fmt(opacity) + "\" stroke=\"" + stroke +
             "\" stroke-width=\"1.5\"/>\n";
  }

  void segment(const Vec<double>& a, const Vec<double>& b, const std::string& color, double width) {
    body_ += "<line x1=\"" + fmt(px(a[0])) + "\" y1=\"" + fmt(py(a[1])) + "\" x2=\"" + fmt(px(b[0])) +
             "\" y2=\"" + fmt(py(b[1])) + "\" stroke=\"" + color + "\" stroke-width=\"" + fmt(width) +
             "\"/>\n";
  }

  void point(const Vec<double>& p, const std::string& color) {
    body_ += "<circle cx=\"" + fmt(px(p[0])) + "\" cy=\"" + fmt(py(p[1])) + "\" r=\"4\" fill=\"" +
             color + "\"/>\n";
  }

  std::string finish() const {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\">\n" + body_ +
           "</svg>\n";
  }

 private:
  static std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
  }
  double px(double x) const { return (x - x0_) * scale_; }
  double py(double y) const { return (ymax_ - y) * scale_; }

  double x0_ = 0, y0_ = 0, ymax_ = 0, scale_ = 1;
  std::string body_;
};

inline std::vector<Vec<double>> polygon_points(const Polytope<Rat>& p) {
  std::vector<Vec<double>> out;
  for (const auto& v : p.verts) out.push_back(vec_to_double(v));
  return out;
}

inline std::string slab_fill(size_t i) {
  static const char* palette[] = {"#e6550d", "#3182bd", "#31a354", "#756bb1", "#636363",
                                  "#fd8d3c", "#6baed6", "#74c476", "#9e9ac8", "#969696"};
  return palette[i % 10];
}

// Body, difference body, slab triangles and (optionally) the affine
// diameters through a marked point.
inline std::string render_diameter_scene(const Polytope<Rat>& p, const std::vector<FacetPair>& pairs,
                                         const Polytope<Rat>& dp, const Vec<Rat>* point) {
  BBox<Rat> bb = dp.bbox();
  Vec<double> lo = vec_to_double(bb.lo), hi = vec_to_double(bb.hi);
  SvgCanvas canvas(lo[0], lo[1], hi[0], hi[1]);
  canvas.polygon(polygon_points(dp), "#f0f0f0", 1.0, "#888888");
  std::vector<int> reps = unordered_slab_indices(pairs);
  for (size_t i = 0; i < reps.size(); ++i)
    canvas.polygon(polygon_points(pairs[reps[i]].slab), slab_fill(i), 0.35, "none");
  canvas.polygon(polygon_points(p), "none", 0.0, "#000000");
  if (point) {
    for (const auto& [a, b] : diameters_through(p, *point, pairs))
      canvas.segment(vec_to_double(a), vec_to_double(b), "#d62728", 2.0);
    canvas.point(vec_to_double(*point), "#d62728");
  }
  return canvas.finish();
}

inline std::string render_triangulation(const std::vector<Polytope<Rat>>& tris,
                                        const Polytope<Rat>& dp) {
  BBox<Rat> bb = dp.bbox();
  Vec<double> lo = vec_to_double(bb.lo), hi = vec_to_double(bb.hi);
  SvgCanvas canvas(lo[0], lo[1], hi[0], hi[1]);
  for (size_t i = 0; i < tris.size(); ++i)
    canvas.polygon(polygon_points(tris[i]), slab_fill(i), 0.5, "#444444");
  canvas.polygon(polygon_points(dp), "none", 0.0, "#000000");
  return canvas.finish();
}

}  // namespace affdia
