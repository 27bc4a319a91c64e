#pragma once

// Polytope JSON interchange:
//   {"dim": n, "vertices": [[c, ...], ...]}
// with each coordinate either a JSON number or a string "p/q". Integer
// numbers are taken exactly; non-integer numbers are taken at their IEEE
// double value (use "p/q" strings for exact decimals). Rationals are always
// emitted as strings so exact results never pass through floats.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "affdia/hull3d.hpp"
#include "affdia/polytope.hpp"

namespace affdia {

using Json = nlohmann::ordered_json;

inline Rat rat_from_json(const Json& j) {
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
  if (j.is_number_unsigned()) return Rat(Int(j.get<unsigned long long>()));
  if (j.is_number_float()) return rat_from_double(j.get<double>());
  fail(Err::ParseError, "coordinate must be a number or a 'p/q' string");
}

struct PointSet {
  int dim = 0;
  std::vector<Vec<Rat>> points;
};

inline PointSet pointset_from_json(const Json& j) {
  require(j.is_object() && j.contains("dim") && j.contains("vertices"), Err::ParseError,
          "expected {\"dim\": n, \"vertices\": [...]}");
  PointSet ps;
  require(j["dim"].is_number_integer(), Err::ParseError, "dim must be an integer");
  ps.dim = j["dim"].get<int>();
  require(ps.dim >= 1, Err::ParseError, "dim must be positive");
  require(j["vertices"].is_array() && !j["vertices"].empty(), Err::ParseError,
          "vertices must be a non-empty array");
  for (const auto& row : j["vertices"]) {
    require(row.is_array() && static_cast<int>(row.size()) == ps.dim, Err::ParseError,
            "vertex arity differs from dim");
    Vec<Rat> v;
    for (const auto& c : row) v.push_back(rat_from_json(c));
    ps.points.push_back(std::move(v));
  }
  return ps;
}

inline Json parse_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  require(!j.is_discarded(), Err::ParseError, "malformed JSON");
  return j;
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), Err::ParseError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

inline PointSet load_pointset(const std::string& path) { return pointset_from_json(load_json_file(path)); }

// Vertices are hulled on load; interior/duplicate points are removed and the
// facet structure is derived.
inline Polytope<Rat> load_polytope(const std::string& path) {
  PointSet ps = load_pointset(path);
  require(ps.dim == 2 || ps.dim == 3, Err::NotSupported,
          "full polytopes are supported in dim 2 and 3");
  return convex_hull(ps.points, ps.dim);
}

inline Json pointset_to_json(int dim, const std::vector<Vec<Rat>>& pts) {
  Json j;
  j["dim"] = dim;
  Json rows = Json::array();
  for (const auto& v : pts) {
    Json row = Json::array();
    for (const auto& c : v) row.push_back(rat_to_string(c));
    rows.push_back(row);
  }
  j["vertices"] = rows;
  return j;
}

inline Json polytope_to_json(const Polytope<Rat>& p) { return pointset_to_json(p.dim, p.verts); }

inline Json rat_vec_to_json(const Vec<Rat>& v) {
  Json row = Json::array();
  for (const auto& c : v) row.push_back(rat_to_string(c));
  return row;
}

// "a,b" or "a,b,c" with rational components.
inline Vec<Rat> point_from_string(const std::string& s) {
  Vec<Rat> v;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) v.push_back(rat_from_string(part));
  require(v.size() == 2 || v.size() == 3, Err::ParseError, "point must have 2 or 3 coordinates");
  return v;
}

}  // namespace affdia
