#pragma once

// Small dense vectors over an arbitrary scalar ring (Rat, Int or double).

#include <vector>

#include "affdia/errors.hpp"
#include "affdia/rational.hpp"

namespace affdia {

template <class R>
using Vec = std::vector<R>;

template <class R>
Vec<R> vec_add(const Vec<R>& a, const Vec<R>& b) {
  Vec<R> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

template <class R>
Vec<R> vec_sub(const Vec<R>& a, const Vec<R>& b) {
  Vec<R> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

template <class R>
Vec<R> vec_neg(const Vec<R>& a) {
  Vec<R> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

template <class R>
Vec<R> vec_scale(const R& s, const Vec<R>& a) {
  Vec<R> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

template <class R>
R dot(const Vec<R>& a, const Vec<R>& b) {
  R s{};
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class R>
R norm_sq(const Vec<R>& a) {
  return dot(a, a);
}

template <class R>
bool is_zero_vec(const Vec<R>& a) {
  for (const R& x : a)
    if (!(x == R{})) return false;
  return true;
}

// z-component of the 2D cross product.
template <class R>
R cross2(const Vec<R>& a, const Vec<R>& b) {
  return a[0] * b[1] - a[1] * b[0];
}

template <class R>
Vec<R> cross3(const Vec<R>& a, const Vec<R>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Outward normal of a CCW polygon edge with direction d.
template <class R>
Vec<R> rot_cw(const Vec<R>& d) {
  return {d[1], -d[0]};
}

template <class R>
Vec<R> rot_ccw(const Vec<R>& d) {
  return {-d[1], d[0]};
}

template <class R>
R det3(const Vec<R>& c0, const Vec<R>& c1, const Vec<R>& c2) {
  return c0[0] * (c1[1] * c2[2] - c1[2] * c2[1]) - c1[0] * (c0[1] * c2[2] - c0[2] * c2[1]) +
         c2[0] * (c0[1] * c1[2] - c0[2] * c1[1]);
}

// Orientation of c relative to segment a->b (positive = left turn).
template <class R>
R orient2(const Vec<R>& a, const Vec<R>& b, const Vec<R>& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

template <class R>
bool lex_less(const Vec<R>& a, const Vec<R>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

template <class R>
Vec<double> vec_to_double(const Vec<R>& a) {
  Vec<double> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = ScalarTraits<R>::dbl(a[i]);
  return r;
}

inline Vec<Rat> vec_rat_from_double(const Vec<double>& a) {
  Vec<Rat> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = rat_from_double(a[i]);
  return r;
}

// Scale a rational direction to the primitive integer vector with the same
// orientation (unique representative of the open ray).
inline Vec<Rat> primitive_direction(const Vec<Rat>& u) {
  Int l = 1;
  for (const Rat& c : u) l = boost::multiprecision::lcm(l, denominator(c));
  std::vector<Int> iv;
  iv.reserve(u.size());
  for (const Rat& c : u) iv.push_back(numerator(c) * (l / denominator(c)));
  Int g = 0;
  for (const Int& x : iv) g = boost::multiprecision::gcd(g, x);
  Vec<Rat> out;
  out.reserve(u.size());
  for (const Int& x : iv) out.push_back(g > 1 ? Rat(x / g) : Rat(x));
  return out;
}

// Primitive representative of the line {u, -u}: first nonzero entry positive.
// Second result tells whether the sign was flipped.
inline std::pair<Vec<Rat>, bool> canonical_axis(const Vec<Rat>& u) {
  Vec<Rat> p = primitive_direction(u);
  for (const Rat& c : p) {
    if (c.sign() > 0) return {p, false};
    if (c.sign() < 0) return {vec_neg(p), true};
  }
  fail(Err::InvalidInput, "zero direction");
}

// Divide an integer vector (and optional offset) by the gcd of all entries.
inline void reduce_int_vec(std::vector<Int>& v, Int* offset = nullptr) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  if (offset) g = boost::multiprecision::gcd(g, *offset);
  if (g > 1) {
    for (Int& x : v) x /= g;
    if (offset) *offset /= g;
  }
}

}  // namespace affdia
