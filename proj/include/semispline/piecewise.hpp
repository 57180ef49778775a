#ifndef SEMISPLINE_PIECEWISE_HPP
#define SEMISPLINE_PIECEWISE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "semispline/errors.hpp"
#include "semispline/numeric.hpp"
#include "semispline/poly.hpp"

namespace semispline {

namespace detail {

// Sign-change bisection for polynomial roots, used only where an exact root is
// out of reach (derivative degree >= 2). 256 probes is plenty for the low
// degrees that occur here.
inline std::vector<double> poly_roots_numeric(const std::vector<double>& p, double lo, double hi) {
  std::vector<double> roots;
  if (p.size() <= 1 || !(lo < hi)) return roots;
  const int probes = 256;
  double prev_x = lo;
  double prev_v = poly_eval(p, lo);
  for (int i = 1; i <= probes; ++i) {
    double x = lo + (hi - lo) * i / probes;
    double v = poly_eval(p, x);
    if (prev_v == 0.0) {
      roots.push_back(prev_x);
    } else if ((prev_v < 0.0) != (v < 0.0)) {
      double a = prev_x, b = x, va = prev_v;
      for (int it = 0; it < 80; ++it) {
        double m = 0.5 * (a + b);
        double vm = poly_eval(p, m);
        if (vm == 0.0) { a = b = m; break; }
        if ((va < 0.0) != (vm < 0.0)) b = m; else { a = m; va = vm; }
      }
      roots.push_back(0.5 * (a + b));
    }
    prev_x = x;
    prev_v = v;
  }
  if (prev_v == 0.0) roots.push_back(prev_x);
  return roots;
}

template <class T>
std::vector<double> to_double_poly(const std::vector<T>& p) {
  std::vector<double> r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = to_double(p[i]);
  return r;
}

template <class T>
T abs_value(const T& v) {
  return v < T(0) ? T(-v) : v;
}

// Critical points of p inside (x0, x1). Exact when p' is constant or linear,
// numeric otherwise; numeric candidates are converted back to T (a double is
// an exact rational, so exact evaluation at a nearby point is still exact).
template <class T>
std::vector<T> interior_critical_points(const std::vector<T>& p, const T& x0, const T& x1) {
  std::vector<T> out;
  std::vector<T> d = poly_derivative(p);
  poly_trim(d);
  if (d.size() <= 1) return out;  // derivative constant: no interior extremum
  if (d.size() == 2) {
    T root = -d[0] / d[1];
    if (x0 < root && root < x1) out.push_back(root);
    return out;
  }
  auto roots = poly_roots_numeric(to_double_poly(d), to_double(x0), to_double(x1));
  for (double r : roots) {
    T rt = from_rational<T>(rational_from_double(r));
    if (x0 < rt && rt < x1) out.push_back(rt);
  }
  return out;
}

// max over [x0, x1] of |p|, evaluated at endpoints and critical points.
template <class T>
std::pair<T, T> max_abs_on_interval(const std::vector<T>& p, const T& x0, const T& x1) {
  T best = abs_value(poly_eval(p, x0));
  T arg = x0;
  auto consider = [&](const T& x) {
    T v = abs_value(poly_eval(p, x));
    if (v > best) { best = v; arg = x; }
  };
  consider(x1);
  for (const T& x : interior_critical_points(p, x0, x1)) consider(x);
  return {best, arg};
}

}  // namespace detail

// Piecewise polynomial on strictly increasing breakpoints b_0 < ... < b_r,
// identically zero outside [b_0, b_r). Pieces live on half-open cells
// [b_j, b_{j+1}); evaluation at b_r returns zero.
template <class T>
class PiecewisePolynomial {
public:
  PiecewisePolynomial(std::vector<T> breakpoints, std::vector<std::vector<T>> pieces)
      : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (breakpoints_.size() < 2)
      throw InvalidArgument("piecewise polynomial needs at least two breakpoints");
    if (pieces_.size() + 1 != breakpoints_.size())
      throw InvalidArgument("piece count must be one less than breakpoint count");
    for (size_t i = 0; i + 1 < breakpoints_.size(); ++i)
      if (!(breakpoints_[i] < breakpoints_[i + 1]))
        throw InvalidArgument("breakpoints must be strictly increasing");
  }

  const std::vector<T>& breakpoints() const { return breakpoints_; }
  const std::vector<std::vector<T>>& pieces() const { return pieces_; }
  const T& support_lo() const { return breakpoints_.front(); }
  const T& support_hi() const { return breakpoints_.back(); }

  T operator()(const T& x) const {
    if (x < breakpoints_.front() || !(x < breakpoints_.back())) return T(0);
    size_t j = cell_index(x);
    return poly_eval(pieces_[j], x);
  }

  // Integral over [lo, hi] intersected with the support; unset bounds mean
  // the corresponding infinite endpoint. Returns 0 when hi <= lo.
  T integrate(const std::optional<T>& lo = std::nullopt,
              const std::optional<T>& hi = std::nullopt) const {
    T a = breakpoints_.front();
    T b = breakpoints_.back();
    if (lo && *lo > a) a = *lo;
    if (hi && *hi < b) b = *hi;
    if (!(a < b)) return T(0);
    T acc = T(0);
    for (size_t j = 0; j < pieces_.size(); ++j) {
      T cl = std::max(a, breakpoints_[j]);
      T ch = std::min(b, breakpoints_[j + 1]);
      if (!(cl < ch)) continue;
      std::vector<T> F = poly_antiderivative(pieces_[j]);
      acc += poly_eval(F, ch) - poly_eval(F, cl);
    }
    return acc;
  }

  // r-th raw moment over the whole support.
  T moment(unsigned r) const {
    T acc = T(0);
    for (size_t j = 0; j < pieces_.size(); ++j) {
      // x^r * p: shift coefficients up by r
      std::vector<T> q(pieces_[j].size() + r, T(0));
      for (size_t i = 0; i < pieces_[j].size(); ++i) q[i + r] = pieces_[j][i];
      std::vector<T> F = poly_antiderivative(q);
      acc += poly_eval(F, breakpoints_[j + 1]) - poly_eval(F, breakpoints_[j]);
    }
    return acc;
  }

  // Generalized inverse of the normalized CDF; the root is generally
  // irrational so the return type is double regardless of T.
  // Bisection to a relative tolerance of 1e-12.
  double quantile(double p) const {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("quantile probability must lie in [0,1]");
    T mass = integrate();
    if (!(mass > T(0))) throw InvalidArgument("quantile of a zero-mass function");
    if (p == 0.0) return to_double(breakpoints_.front());
    if (p == 1.0) return to_double(breakpoints_.back());
    T target = from_rational<T>(rational_from_double(p)) * mass;
    T cum = T(0);
    for (size_t j = 0; j < pieces_.size(); ++j) {
      std::vector<T> F = poly_antiderivative(pieces_[j]);
      T mass_j = poly_eval(F, breakpoints_[j + 1]) - poly_eval(F, breakpoints_[j]);
      if (cum + mass_j < target) {
        cum += mass_j;
        continue;
      }
      // target falls inside cell j; bisect in double
      std::vector<double> Fd = detail::to_double_poly(F);
      double lo = to_double(breakpoints_[j]);
      double hi = to_double(breakpoints_[j + 1]);
      double base = poly_eval(Fd, lo);
      double t = to_double(target - cum);
      while (hi - lo > 1e-12 * std::max(1.0, std::abs(lo))) {
        double m = 0.5 * (lo + hi);
        if (poly_eval(Fd, m) - base < t) lo = m; else hi = m;
      }
      return 0.5 * (lo + hi);
    }
    return to_double(breakpoints_.back());
  }

  // Leftmost maximizer over the closed support. Exact whenever piece
  // derivatives have degree <= 1 (cubic and lower pieces).
  T mode() const {
    bool have = false;
    T best_val = T(0);
    T best_arg = breakpoints_.front();
    auto consider = [&](const T& x, const T& v) {
      if (!have || v > best_val) { best_val = v; best_arg = x; have = true; }
      else if (v == best_val && x < best_arg) best_arg = x;
    };
    for (size_t j = 0; j < pieces_.size(); ++j) {
      const T& x0 = breakpoints_[j];
      const T& x1 = breakpoints_[j + 1];
      consider(x0, poly_eval(pieces_[j], x0));
      consider(x1, poly_eval(pieces_[j], x1));
      for (const T& x : detail::interior_critical_points(pieces_[j], x0, x1))
        consider(x, poly_eval(pieces_[j], x));
    }
    return best_arg;
  }

  // Supremum of |p'| over [lo, hi] clipped to the support, a Lipschitz
  // constant for the restriction to each cell. Zero when the window misses
  // the support entirely.
  T lipschitz_bound(const std::optional<T>& lo = std::nullopt,
                    const std::optional<T>& hi = std::nullopt) const {
    T a = breakpoints_.front();
    T b = breakpoints_.back();
    if (lo && *lo > a) a = *lo;
    if (hi && *hi < b) b = *hi;
    if (!(a <= b)) return T(0);
    T best = T(0);
    for (size_t j = 0; j < pieces_.size(); ++j) {
      T cl = std::max(a, breakpoints_[j]);
      T ch = std::min(b, breakpoints_[j + 1]);
      if (!(cl <= ch)) continue;
      std::vector<T> d = poly_derivative(pieces_[j]);
      poly_trim(d);
      if (d.empty()) continue;
      T v = detail::max_abs_on_interval(d, cl, ch).first;
      if (v > best) best = v;
    }
    return best;
  }

  // Supremum of |p| over [lo, hi] clipped to the support.
  T max_abs(const std::optional<T>& lo = std::nullopt,
            const std::optional<T>& hi = std::nullopt) const {
    T a = breakpoints_.front();
    T b = breakpoints_.back();
    if (lo && *lo > a) a = *lo;
    if (hi && *hi < b) b = *hi;
    if (!(a <= b)) return T(0);
    T best = T(0);
    for (size_t j = 0; j < pieces_.size(); ++j) {
      T cl = std::max(a, breakpoints_[j]);
      T ch = std::min(b, breakpoints_[j + 1]);
      if (!(cl <= ch)) continue;
      T v = detail::max_abs_on_interval(pieces_[j], cl, ch).first;
      if (v > best) best = v;
    }
    return best;
  }

private:
  size_t cell_index(const T& x) const {
    // last j with breakpoints_[j] <= x; caller guarantees x in [b_0, b_r)
    size_t lo = 0, hi = breakpoints_.size() - 1;
    while (lo + 1 < hi) {
      size_t mid = (lo + hi) / 2;
      if (breakpoints_[mid] <= x) lo = mid; else hi = mid;
    }
    return lo;
  }

  std::vector<T> breakpoints_;
  std::vector<std::vector<T>> pieces_;
};

}  // namespace semispline

#endif
