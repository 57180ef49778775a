#include "semispline/stats.hpp"

#include <algorithm>
#include <cmath>

#include "semispline/bspline.hpp"
#include "semispline/errors.hpp"
#include "semispline/quadrature.hpp"
#include "semispline/tpower.hpp"

namespace semispline {

namespace {

void check_positive_target(int64_t n) {
  if (n < 1) throw InvalidArgument("statistics need a positive target value");
}

PiecewisePolynomial<Rational> limit_spline(const GeneratorVector& gens,
                                           const std::vector<Rational>& weights) {
  return piecewise_expand(SystemMatrix<Rational>(weights, gens).knot_sequence());
}

}  // namespace

DotPlotData dot_plot(const GeneratorVector& gens, const std::vector<int64_t>& weights, int64_t n,
                     bool include_zeros, uint64_t capacity) {
  check_positive_target(n);
  std::vector<Rational> w(weights.begin(), weights.end());
  LengthMultiset dist = weighted_lengths(gens, w, n, capacity);

  DotPlotData out;
  out.n = n;
  out.total = dist.total;
  if (dist.total == 0) {
    out.empty = true;
    return out;
  }
  // integer weights: every key is an integer
  const int64_t lo = numerator(dist.counts.begin()->first).convert_to<int64_t>();
  const int64_t hi = numerator(dist.counts.rbegin()->first).convert_to<int64_t>();
  if (static_cast<uint64_t>(hi - lo) + 1 > capacity)
    throw CapacityExceeded("dot plot row range exceeds capacity");
  out.rows.reserve(static_cast<size_t>(hi - lo) + 1);
  auto it = dist.counts.begin();
  for (int64_t l = lo; l <= hi; ++l) {
    DotRow row;
    row.ell = l;
    row.position = Rational(l, n);
    if (it != dist.counts.end() && it->first == Rational(l)) {
      row.multiplicity = it->second;
      ++it;
    } else if (!include_zeros) {
      continue;
    }
    row.height = Rational(row.multiplicity * n, dist.total);
    out.rows.push_back(std::move(row));
  }
  return out;
}

HistogramData histogram(const GeneratorVector& gens, const std::vector<double>& weights, int64_t n,
                        int bins, uint64_t capacity) {
  check_positive_target(n);
  if (bins < 1) throw InvalidArgument("histogram needs at least one bin");
  std::vector<double> samples = weighted_length_samples(gens, weights, n, capacity);

  HistogramData out;
  out.n = n;
  out.total = samples.size();
  if (samples.empty()) {
    out.empty = true;
    return out;
  }
  for (double& s : samples) s /= static_cast<double>(n);
  auto [mn_it, mx_it] = std::minmax_element(samples.begin(), samples.end());
  double mn = *mn_it, mx = *mx_it;
  if (mn == mx) {
    HistogramBin bin;
    bin.lo = mn - 0.5;
    bin.hi = mn + 0.5;
    bin.count = samples.size();
    bin.density = 1.0;
    out.bins.push_back(bin);
    return out;
  }
  const double width = (mx - mn) / bins;
  out.bins.resize(static_cast<size_t>(bins));
  for (int b = 0; b < bins; ++b) {
    out.bins[static_cast<size_t>(b)].lo = mn + width * b;
    out.bins[static_cast<size_t>(b)].hi = mn + width * (b + 1);
  }
  out.bins.back().hi = mx;  // guard against rounding
  for (double s : samples) {
    int b = static_cast<int>((s - mn) / width);
    if (b >= bins) b = bins - 1;
    if (b < 0) b = 0;
    ++out.bins[static_cast<size_t>(b)].count;
  }
  for (auto& bin : out.bins)
    bin.density = static_cast<double>(bin.count) /
                  (static_cast<double>(out.total) * (bin.hi - bin.lo));
  return out;
}

StatSummary summary(const GeneratorVector& gens, const std::vector<Rational>& weights, int64_t n) {
  check_positive_target(n);
  LengthMultiset dist = weighted_lengths(gens, weights, n);
  if (dist.total == 0)
    throw EmptyFactorizationSet("no factorizations for target " + std::to_string(n));

  StatSummary out;
  out.total = dist.total;

  Rational m1 = 0, m2 = 0;
  for (const auto& [len, mult] : dist.counts) {
    Rational c(mult);
    m1 += len * c;
    m2 += len * len * c;
  }
  Rational mean = m1 / Rational(dist.total);
  Rational variance = m2 / Rational(dist.total) - mean * mean;
  out.actual_mean = to_double(mean);
  out.actual_stdev = std::sqrt(std::max(0.0, to_double(variance)));

  // median: average of the order statistics at ranks floor((N+1)/2) and
  // floor((N+2)/2), 1-indexed
  BigInt r1 = (dist.total + 1) / 2;
  BigInt r2 = (dist.total + 2) / 2;
  Rational v1, v2;
  bool h1 = false, h2 = false;
  BigInt cum = 0;
  for (const auto& [len, mult] : dist.counts) {
    cum += mult;
    if (!h1 && cum >= r1) { v1 = len; h1 = true; }
    if (!h2 && cum >= r2) { v2 = len; h2 = true; break; }
  }
  out.actual_median = to_double((v1 + v2) / 2);

  const BigInt* best = nullptr;
  for (const auto& [len, mult] : dist.counts)
    if (!best || mult > *best) {
      best = &mult;
      out.actual_mode = to_double(len);
    }

  const double nd = static_cast<double>(n);
  std::vector<Rational> knots(weights.size());
  for (size_t i = 0; i < weights.size(); ++i) knots[i] = weights[i] / Rational(gens[i]);
  if (std::all_of(knots.begin(), knots.end(),
                  [&](const Rational& q) { return q == knots.front(); })) {
    // all ratios equal: the limit is a point mass at the common ratio
    double at = nd * to_double(knots.front());
    out.predicted_mean = out.predicted_median = out.predicted_mode = at;
    out.predicted_stdev = 0.0;
    return out;
  }
  PiecewisePolynomial<Rational> spline = piecewise_expand(make_knots(knots));
  Rational s1 = spline.moment(1);
  Rational s2 = spline.moment(2);
  out.predicted_mean = nd * to_double(s1);
  out.predicted_median = nd * spline.quantile(0.5);
  out.predicted_mode = nd * to_double(spline.mode());
  out.predicted_stdev = nd * std::sqrt(std::max(0.0, to_double(s2 - s1 * s1)));
  return out;
}

FStatReport f_statistic(const GeneratorVector& gens, const std::vector<Rational>& weights,
                        int64_t n, const FunctionSpec& f, const Interval& interval) {
  check_positive_target(n);
  LengthMultiset dist = weighted_lengths(gens, weights, n);
  if (dist.total == 0)
    throw EmptyFactorizationSet("no factorizations for target " + std::to_string(n));

  double acc = 0.0;
  for (const auto& [len, mult] : dist.counts) {
    Rational pos = len / Rational(n);
    if (!interval.contains(pos)) continue;
    acc += f.f(to_double(pos)) * to_double(mult);
  }

  FStatReport out;
  out.actual = acc / to_double(dist.total);
  PiecewisePolynomial<Rational> spline = limit_spline(gens, weights);
  out.predicted =
      integrate_against(spline, f.f, interval.lo_double(), interval.hi_double(), f.kinks);
  out.difference = out.actual - out.predicted;
  return out;
}

}  // namespace semispline
