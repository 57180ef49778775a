#include "semispline/bounds.hpp"

#include <cmath>
#include <sstream>

#include "semispline/bspline.hpp"
#include "semispline/lattice.hpp"
#include "semispline/quadrature.hpp"

namespace semispline {

namespace {

Wide wide_pow(const Wide& base, const Wide& exp) { return boost::multiprecision::pow(base, exp); }

std::string matrix_description(const std::vector<Rational>& w, const GeneratorVector& g) {
  std::ostringstream os;
  os << "weights=(";
  for (size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << format_rational(w[i]);
  os << ") gens=(";
  for (size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
  os << ")";
  return os.str();
}

std::vector<int64_t> require_integer_weights(const std::vector<Rational>& weights) {
  std::vector<int64_t> w(weights.size());
  for (size_t i = 0; i < weights.size(); ++i) {
    if (denominator(weights[i]) != 1)
      throw InvalidArgument("unimodularity checks need integer weights");
    w[i] = numerator(weights[i]).convert_to<int64_t>();
  }
  return w;
}

void require_independent_rows(const std::vector<Rational>& weights, const GeneratorVector& gens) {
  bool dependent = true;
  for (size_t i = 1; i < weights.size(); ++i)
    if (weights[i] * Rational(gens[0]) != weights[0] * Rational(gens[i])) {
      dependent = false;
      break;
    }
  if (dependent) throw DependentRows("matrix rows are linearly dependent");
}

Rational density_prefactor(const GeneratorVector& gens, int64_t n) {
  // n^{k-1} / ((k-1)! n_1 ... n_k)
  const unsigned k = static_cast<unsigned>(gens.size());
  BigInt den = factorial(k - 1);
  for (int64_t g : gens) den *= g;
  return Rational(int_pow(BigInt(n), k - 1), den);
}

}  // namespace

double e1(unsigned k) {
  if (k < 2) throw InvalidArgument("e1 requires at least two columns");
  Wide v = wide_pow(Wide(8), Wide(static_cast<int>(k) - 2)) *
           wide_pow(Wide(static_cast<int>(k) - 1),
                    Wide(3.0 * k * k - k - 7) / 2);
  return round_up(v);
}

double e2(unsigned k) {
  if (k < 3) throw InvalidArgument("e2 requires at least three columns");
  Wide v = wide_pow(Wide(8), Wide(static_cast<int>(k) - 3)) *
           wide_pow(Wide(static_cast<int>(k) - 2),
                    Wide(3.0 * k * k - 7.0 * k - 3) / 2);
  return round_up(v);
}

double e3(int64_t n, unsigned k, double alpha, double beta, double c1, double c2, double c3) {
  if (k < 3) throw InvalidArgument("e3 requires at least three columns");
  if (n < 1) throw InvalidArgument("e3 requires a positive target");
  if (!(beta >= alpha)) throw InvalidArgument("e3 requires beta >= alpha");
  Wide width = Wide(beta) - Wide(alpha);
  Wide E2(e2(k));
  Wide main = (width * (Wide(c1) * E2 + Wide(c3)) + 2 * Wide(c2)) *
              wide_pow(Wide(n), Wide(static_cast<int>(k) - 2));
  Wide tail = Wide(c1) * E2 * wide_pow(Wide(n), Wide(static_cast<int>(k) - 3));
  return round_up(main + tail);
}

BoundReport check_theorem_a(const GeneratorVector& gens, const std::vector<Rational>& weights,
                            int64_t n, const Interval& interval) {
  if (n < 1) throw InvalidArgument("theorem A check requires a positive target");
  if (gens.gcd() != 1) throw InvalidArgument("theorem A check requires coprime generators");
  require_independent_rows(weights, gens);
  const unsigned k = static_cast<unsigned>(gens.size());

  LengthMultiset dist = weighted_lengths(gens, weights, n);
  // count lengths with l/n in the interval, scanning keys against n*alpha
  BigInt inside = 0;
  for (const auto& [len, mult] : dist.counts) {
    if (interval.lo && len < *interval.lo * Rational(n)) continue;
    if (interval.hi && len > *interval.hi * Rational(n)) continue;
    inside += mult;
  }

  PiecewisePolynomial<Rational> spline = piecewise_expand(make_knots(
      SystemMatrix<Rational>(weights, gens).knots()));
  Rational integral = spline.integrate(interval.lo, interval.hi);
  Rational predicted = density_prefactor(gens, n) * integral;
  Rational lhs = Rational(inside) - predicted;
  if (lhs < 0) lhs = -lhs;

  double bound = round_up(wide_pow(Wide(n), Wide(static_cast<int>(k) - 2)) * Wide(e1(k)));

  BoundReport rep;
  rep.theorem = "A";
  rep.instance = matrix_description(weights, gens) + " n=" + std::to_string(n) +
                 " I=" + interval.describe();
  rep.lhs = to_double(lhs);
  rep.bound = bound;
  rep.slack = bound - rep.lhs;
  rep.exact = true;
  rep.pass = lhs <= rational_from_double(bound);
  rep.constants["e1"] = e1(k);
  rep.constants["count"] = to_double(inside);
  rep.constants["integral"] = to_double(integral);
  return rep;
}

BoundReport check_theorem_b(const SystemMatrix<Rational>& A, const TargetPair& b) {
  std::vector<int64_t> w = require_integer_weights(A.weights());
  if (!is_unimodular(w, A.gens()))
    throw NotUnimodular("theorem B requires a unimodular system");
  const unsigned k = static_cast<unsigned>(A.cols());

  BigInt count = vpf(A, b);
  Rational tp = truncated_power(A, Rational(b.m), Rational(b.n));
  Rational lhs = Rational(count) - tp;
  if (lhs < 0) lhs = -lhs;

  double bound;
  if (b.n == 0) {
    // n^{k-3} at n = 0 is 0^0 = 1 for k = 3 and 0 for larger k
    bound = k == 3 ? e2(k) : 0.0;
  } else {
    bound = round_up(wide_pow(Wide(b.n), Wide(static_cast<int>(k) - 3)) * Wide(e2(k)));
  }

  BoundReport rep;
  rep.theorem = "B";
  rep.instance = matrix_description(A.weights(), A.gens()) + " b=(" + std::to_string(b.m) + "," +
                 std::to_string(b.n) + ")";
  rep.lhs = to_double(lhs);
  rep.bound = bound;
  rep.slack = bound - rep.lhs;
  rep.exact = true;
  rep.pass = lhs <= rational_from_double(bound);
  rep.constants["e2"] = e2(k);
  rep.constants["vpf"] = to_double(count);
  rep.constants["tpower"] = to_double(tp);
  return rep;
}

BoundReport check_theorem_c(const GeneratorVector& gens, const std::vector<Rational>& weights,
                            int64_t n, const Interval& interval, const FunctionSpec& f) {
  if (n < 1) throw InvalidArgument("theorem C check requires a positive target");
  std::vector<int64_t> w = require_integer_weights(weights);
  if (!is_unimodular(w, gens)) throw NotUnimodular("theorem C requires a unimodular system");
  const unsigned k = static_cast<unsigned>(gens.size());

  PiecewisePolynomial<Rational> spline = piecewise_expand(make_knots(
      SystemMatrix<Rational>(weights, gens).knots()));

  // width precondition in exact arithmetic; unbounded intervals always pass
  if (interval.bounded() && *interval.hi - *interval.lo < Rational(1, n))
    throw IntervalTooNarrow("interval must have width at least 1/n");

  // The bound constants live on the clamped interval: outside the spline
  // support both sides of the inequality are unchanged, and clamping keeps
  // e3 finite for unbounded requests.
  Rational lo_c = spline.support_lo();
  Rational hi_c = spline.support_hi();
  if (interval.lo && *interval.lo > lo_c) lo_c = *interval.lo;
  if (interval.hi && *interval.hi < hi_c) hi_c = *interval.hi;
  if (lo_c > hi_c) lo_c = hi_c;  // window misses the support entirely

  LengthMultiset dist = weighted_lengths(gens, weights, n);
  double sum = 0.0;
  for (const auto& [len, mult] : dist.counts) {
    if (interval.lo && len < *interval.lo * Rational(n)) continue;
    if (interval.hi && len > *interval.hi * Rational(n)) continue;
    sum += f.f(to_double(len) / static_cast<double>(n)) * to_double(mult);
  }

  const double lo_d = to_double(lo_c), hi_d = to_double(hi_c);
  double integral = integrate_against(spline, f.f, lo_d, hi_d, f.kinks);
  double prefactor = to_double(density_prefactor(gens, n));
  double lhs = std::abs(sum - prefactor * integral);

  double c1 = f.sup_abs(lo_d, hi_d);
  double max_spline = round_up(to_double(spline.max_abs(lo_c, hi_c)));
  double lip_spline = round_up(to_double(spline.lipschitz_bound(lo_c, hi_c)));
  // cnorm = 1/((k-1)! n_1...n_k), the n-free part of the density prefactor
  double cnorm = to_double(density_prefactor(gens, 1));
  double c2 = round_up(c1 * max_spline * cnorm);
  double c3 = round_up(cnorm * (f.sup_abs_deriv(lo_d, hi_d) * max_spline + c1 * lip_spline));
  double bound = e3(n, k, lo_d, hi_d, c1, c2, c3);

  BoundReport rep;
  rep.theorem = "C";
  rep.instance = matrix_description(weights, gens) + " n=" + std::to_string(n) +
                 " I=" + interval.describe() + " f=" + f.name;
  rep.lhs = lhs;
  rep.bound = bound;
  rep.slack = bound - lhs;
  rep.exact = false;
  rep.pass = lhs <= bound * (1.0 + 1e-9);
  rep.constants["c1"] = c1;
  rep.constants["c2"] = c2;
  rep.constants["c3"] = c3;
  rep.constants["e2"] = e2(k);
  rep.constants["max_spline"] = max_spline;
  rep.constants["lipschitz_spline"] = lip_spline;
  rep.note = "interval clamped to spline support [" + format_rational(lo_c) + "," +
             format_rational(hi_c) + "] for the constants";
  return rep;
}

}  // namespace semispline
