#pragma once

// Exact scalar arithmetic. All counting and identity checks run on
// arbitrary-precision rationals; doubles are used only for sampling paths.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include "affdia/errors.hpp"

namespace affdia {

// Expression templates are disabled so arithmetic results are plain values
// and template deduction works everywhere.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// Sign-normalizing constructor; the backend requires a positive denominator.
inline Rat make_rat(Int num, Int den) {
  require(!den.is_zero(), Err::InvalidInput, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

inline Rat make_rat(long long num, long long den) { return make_rat(Int(num), Int(den)); }

inline int sgn(const Rat& r) { return r.sign(); }
inline int sgn(const Int& v) { return v.sign(); }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

// Exact value of an IEEE double (doubles are dyadic rationals).
inline Rat rat_from_double(double x) {
  require(std::isfinite(x), Err::InvalidInput, "non-finite number");
  return Rat(x);
}

// "p", "-p" or "p/q" with integer p, q.
inline Rat rat_from_string(std::string_view s) {
  auto bad = [&] { fail(Err::ParseError, "bad rational literal '" + std::string(s) + "'"); };
  if (s.empty()) bad();
  auto is_int = [](std::string_view t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto to_int = [&](std::string_view t) {
    if (!t.empty() && t[0] == '+') t.remove_prefix(1);
    return Int(std::string(t));
  };
  size_t slash = s.find('/');
  try {
    if (slash == std::string_view::npos) {
      if (!is_int(s)) bad();
      return Rat(to_int(s));
    }
    std::string_view p = s.substr(0, slash), q = s.substr(slash + 1);
    if (!is_int(p) || !is_int(q)) bad();
    return make_rat(to_int(p), to_int(q));
  } catch (const std::exception&) {
    bad();
  }
  return Rat();  // unreachable
}

inline std::string rat_to_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

// Comparison policy per scalar mode. Exact mode decides equality exactly;
// float mode uses a tolerance, relative once magnitudes exceed 1.
template <class R>
struct ScalarTraits;

template <>
struct ScalarTraits<Rat> {
  static constexpr bool exact = true;
  static int sign(const Rat& x, double /*eps*/ = 0.0) { return x.sign(); }
  static bool eq(const Rat& a, const Rat& b, double /*eps*/ = 0.0) { return a == b; }
  static Rat from_int(long long v) { return Rat(v); }
  static double dbl(const Rat& x) { return to_double(x); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr double default_eps = 1e-9;
  static int sign(double x, double eps = default_eps) {
    if (x > eps) return 1;
    if (x < -eps) return -1;
    return 0;
  }
  static bool eq(double a, double b, double eps = default_eps) {
    double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) <= eps * scale;
  }
  static double from_int(long long v) { return static_cast<double>(v); }
  static double dbl(double x) { return x; }
};

}  // namespace affdia
