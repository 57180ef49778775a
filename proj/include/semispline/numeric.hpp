#ifndef SEMISPLINE_NUMERIC_HPP
#define SEMISPLINE_NUMERIC_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <string>
#include <string_view>

#include "semispline/errors.hpp"

namespace semispline {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
// Wide floats are used only while assembling error constants, which are then
// rounded outward to double so every reported bound is safe to compare against.
using Wide = boost::multiprecision::cpp_bin_float_50;

template <class T>
inline constexpr bool is_exact_v = false;
template <>
inline constexpr bool is_exact_v<Rational> = true;

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }
inline double to_double(const BigInt& z) { return z.template convert_to<double>(); }
inline double to_double(double x) { return x; }

template <class T>
T from_rational(const Rational& q);
template <>
inline Rational from_rational<Rational>(const Rational& q) { return q; }
template <>
inline double from_rational<double>(const Rational& q) { return to_double(q); }

// Exact: a double is a dyadic rational.
inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw InvalidArgument("cannot convert non-finite double to rational");
  return Rational(x);
}

inline BigInt big_gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline BigInt big_lcm(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt int_pow(BigInt base, unsigned e) {
  BigInt r = 1;
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

template <class T>
T scalar_pow(const T& base, unsigned e) {
  T r = T(1);
  T b = base;
  unsigned k = e;
  while (k) {
    if (k & 1u) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

// "p/q" with q > 0, or "p" when q == 1. Mirrors parse_rational below.
inline std::string format_rational(const Rational& q) {
  std::string s = numerator(q).str();
  BigInt den = denominator(q);
  if (den != 1) {
    s += "/";
    s += den.str();
  }
  return s;
}

// Accepts "p/q", plain integers, and decimal literals like "-0.125" (exact).
// Scientific notation is deliberately rejected: descriptor files are written by
// hand and a silent 1e3 vs 13 typo is worse than a parse error.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw ParseError("cannot parse rational from \"" + std::string(text) + "\"");
  };
  if (text.empty()) return fail();
  // boost's integer parser takes a bare '-' but not '+'
  auto strip_plus = [](std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return s;
  };
  size_t slash = text.find('/');
  if (slash != std::string_view::npos) {
    std::string_view ns = strip_plus(text.substr(0, slash));
    std::string_view ds = strip_plus(text.substr(slash + 1));
    if (ns.empty() || ds.empty() || ds.find('/') != std::string_view::npos) return fail();
    try {
      BigInt num{std::string(ns)};
      BigInt den{std::string(ds)};
      if (den == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
      if (den < 0) {
        num = -num;
        den = -den;
      }
      return Rational(num, den);
    } catch (const std::runtime_error&) {
      return fail();
    }
  }
  size_t dot = text.find('.');
  if (dot != std::string_view::npos) {
    std::string_view ip = text.substr(0, dot);
    std::string_view fp = text.substr(dot + 1);
    if (fp.empty() || fp.find_first_not_of("0123456789") != std::string_view::npos) return fail();
    bool neg = false;
    if (!ip.empty() && (ip[0] == '+' || ip[0] == '-')) {
      neg = ip[0] == '-';
      ip = ip.substr(1);
    }
    if (ip.find_first_not_of("0123456789") != std::string_view::npos) return fail();
    try {
      BigInt whole = ip.empty() ? BigInt(0) : BigInt{std::string(ip)};
      BigInt frac{std::string(fp)};
      BigInt den = int_pow(BigInt(10), static_cast<unsigned>(fp.size()));
      BigInt num = whole * den + frac;
      if (neg) num = -num;
      return Rational(num, den);
    } catch (const std::runtime_error&) {
      return fail();
    }
  }
  try {
    return Rational(BigInt{std::string(strip_plus(text))});
  } catch (const std::runtime_error&) {
    return fail();
  }
}

// Shortest decimal string that round-trips through strtod. Deterministic and
// keeps CSV/JSON output readable (0.1 stays "0.1", not "0.1000...001").
inline std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) return buf;
  }
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

inline double round_up(double x) {
  return std::nextafter(x, std::numeric_limits<double>::infinity());
}

// Upper bound in double for a value computed in 50-digit floats. Values the
// double grid represents exactly pass through unchanged, so constants like
// E2(3) = 1 stay 1.
inline double round_up(const Wide& x) {
  double d = x.convert_to<double>();
  if (Wide(d) >= x) return d;
  return round_up(d);
}

}  // namespace semispline

#endif
