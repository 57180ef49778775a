#ifndef SEMISPLINE_INTERVAL_HPP
#define SEMISPLINE_INTERVAL_HPP

#include <limits>
#include <optional>
#include <string>

#include "semispline/numeric.hpp"

namespace semispline {

// Closed interval [lo, hi]; an unset endpoint is the corresponding infinity.
struct Interval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  static Interval whole() { return {}; }
  static Interval closed(Rational a, Rational b) { return {std::move(a), std::move(b)}; }

  bool contains(const Rational& x) const {
    if (lo && x < *lo) return false;
    if (hi && x > *hi) return false;
    return true;
  }

  bool bounded() const { return lo.has_value() && hi.has_value(); }

  double lo_double() const {
    return lo ? to_double(*lo) : -std::numeric_limits<double>::infinity();
  }
  double hi_double() const {
    return hi ? to_double(*hi) : std::numeric_limits<double>::infinity();
  }

  std::string describe() const {
    std::string a = lo ? format_rational(*lo) : "-inf";
    std::string b = hi ? format_rational(*hi) : "inf";
    return "[" + a + "," + b + "]";
  }
};

}  // namespace semispline

#endif
