#ifndef SEMISPLINE_FUNCTIONS_HPP
#define SEMISPLINE_FUNCTIONS_HPP

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "semispline/errors.hpp"
#include "semispline/interval.hpp"

namespace semispline {

// A test function together with analytic envelopes: sup |f| and sup |f'| over
// a closed interval [lo, hi]. The envelopes feed the error constants, so they
// must be true upper bounds, not estimates.
struct FunctionSpec {
  std::string name;
  std::function<double(double)> f;
  std::function<double(double, double)> sup_abs;
  std::function<double(double, double)> sup_abs_deriv;
  // abscissas where f jumps; quadrature cells must not straddle these
  std::vector<double> kinks;
};

inline FunctionSpec make_power(unsigned r) {
  FunctionSpec s;
  s.name = r == 1 ? "power" : ("power:" + std::to_string(r));
  s.f = [r](double t) { return std::pow(t, static_cast<double>(r)); };
  s.sup_abs = [r](double lo, double hi) {
    double a = std::max(std::abs(lo), std::abs(hi));
    return r == 0 ? 1.0 : std::pow(a, static_cast<double>(r));
  };
  s.sup_abs_deriv = [r](double lo, double hi) {
    if (r == 0) return 0.0;
    double a = std::max(std::abs(lo), std::abs(hi));
    return static_cast<double>(r) * std::pow(a, static_cast<double>(r - 1));
  };
  return s;
}

inline FunctionSpec make_exp() {
  FunctionSpec s;
  s.name = "exp";
  s.f = [](double t) { return std::exp(t); };
  s.sup_abs = [](double, double hi) { return std::exp(hi); };
  s.sup_abs_deriv = [](double, double hi) { return std::exp(hi); };
  return s;
}

// f(t) = e^t sin(t^2); f'(t) = e^t (sin(t^2) + 2 t cos(t^2)), so
// |f| <= e^hi and |f'| <= e^hi (1 + 2 max|t|).
inline FunctionSpec make_exp_sin_sq() {
  FunctionSpec s;
  s.name = "exp-sin-sq";
  s.f = [](double t) { return std::exp(t) * std::sin(t * t); };
  s.sup_abs = [](double, double hi) { return std::exp(hi); };
  s.sup_abs_deriv = [](double lo, double hi) {
    double a = std::max(std::abs(lo), std::abs(hi));
    return std::exp(hi) * (1.0 + 2.0 * a);
  };
  return s;
}

// Indicator of a fixed window. Constant on any interval inside or outside the
// window, which is the only way it is used; the derivative envelope is 0
// because the jump points are interval endpoints, never interior.
inline FunctionSpec make_indicator(const Interval& window) {
  FunctionSpec s;
  s.name = "indicator";
  double lo = window.lo_double();
  double hi = window.hi_double();
  s.f = [lo, hi](double t) { return (t >= lo && t <= hi) ? 1.0 : 0.0; };
  s.sup_abs = [](double, double) { return 1.0; };
  s.sup_abs_deriv = [](double, double) { return 0.0; };
  if (std::isfinite(lo)) s.kinks.push_back(lo);
  if (std::isfinite(hi)) s.kinks.push_back(hi);
  return s;
}

// Registry lookup. Accepted names: "power" (optionally "power:<r>"), "exp",
// "exp-sin-sq", "indicator". The indicator binds to the instance interval.
inline FunctionSpec function_from_name(const std::string& name, const Interval& interval) {
  if (name == "power") return make_power(1);
  if (name.rfind("power:", 0) == 0) {
    const std::string arg = name.substr(6);
    if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad power exponent in function name \"" + name + "\"");
    return make_power(static_cast<unsigned>(std::stoul(arg)));
  }
  if (name == "exp") return make_exp();
  if (name == "exp-sin-sq") return make_exp_sin_sq();
  if (name == "indicator") return make_indicator(interval);
  throw ParseError("unknown function name \"" + name + "\"");
}

}  // namespace semispline

#endif
