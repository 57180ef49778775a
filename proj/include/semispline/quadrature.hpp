#ifndef SEMISPLINE_QUADRATURE_HPP
#define SEMISPLINE_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "semispline/piecewise.hpp"

namespace semispline {

// 32-point Gauss-Legendre rule on [-1, 1], nodes by Newton iteration on the
// Legendre polynomial. Exact for polynomial degree 63, so the only quadrature
// error on f * spline comes from f.
class GaussLegendre {
public:
  explicit GaussLegendre(int n = 32) : x_(n), w_(n) {
    for (int i = 0; i < n; ++i) {
      double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double pp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = 0.0;
        for (int j = 0; j < n; ++j) {
          double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
        }
        pp = n * (x * p0 - p1) / (x * x - 1.0);
        double dx = p0 / pp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      x_[i] = x;
      w_[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
  }

  double integrate(const std::function<double(double)>& f, double a, double b) const {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (size_t i = 0; i < x_.size(); ++i) acc += w_[i] * f(mid + half * x_[i]);
    return acc * half;
  }

private:
  std::vector<double> x_;
  std::vector<double> w_;
};

// integral of f(x) * p(x) over [lo, hi] intersected with the support of p,
// composite over breakpoint cells (4 panels per cell keeps smooth f at
// machine accuracy). Cells additionally split at the given jump abscissas so
// a discontinuous f (an indicator window) still integrates exactly.
template <class T>
double integrate_against(const PiecewisePolynomial<T>& p,
                         const std::function<double(double)>& f, double lo, double hi,
                         const std::vector<double>& jumps = {}) {
  static const GaussLegendre rule;
  double a = std::max(lo, to_double(p.support_lo()));
  double b = std::min(hi, to_double(p.support_hi()));
  if (!(a < b)) return 0.0;
  double acc = 0.0;
  const auto& bps = p.breakpoints();
  for (size_t j = 0; j + 1 < bps.size(); ++j) {
    double cl = std::max(a, to_double(bps[j]));
    double ch = std::min(b, to_double(bps[j + 1]));
    if (!(cl < ch)) continue;
    std::vector<double> cuts{cl, ch};
    for (double x : jumps)
      if (cl < x && x < ch) cuts.push_back(x);
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> piece = detail::to_double_poly(p.pieces()[j]);
    auto integrand = [&](double x) { return f(x) * poly_eval(piece, x); };
    const int panels = 4;
    for (size_t c = 0; c + 1 < cuts.size(); ++c) {
      for (int s = 0; s < panels; ++s) {
        double pl = cuts[c] + (cuts[c + 1] - cuts[c]) * s / panels;
        double ph = cuts[c] + (cuts[c + 1] - cuts[c]) * (s + 1) / panels;
        acc += rule.integrate(integrand, pl, ph);
      }
    }
  }
  return acc;
}

}  // namespace semispline

#endif
