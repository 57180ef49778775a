#ifndef SEMISPLINE_STATS_HPP
#define SEMISPLINE_STATS_HPP

#include <cstdint>
#include <vector>

#include "semispline/functions.hpp"
#include "semispline/interval.hpp"
#include "semispline/numeric.hpp"
#include "semispline/semigroup.hpp"

namespace semispline {

// One dot-plot row: integer length l, its normalized position l/n, the
// multiplicity, and the plot height mult * n / |Z(n)| (the discrete density
// on the l/n axis).
struct DotRow {
  int64_t ell = 0;
  Rational position;
  Rational height;
  BigInt multiplicity;
};

struct DotPlotData {
  std::vector<DotRow> rows;  // every integer l in [min, max], zero rows kept
  BigInt total;              // |Z(n)|
  int64_t n = 0;
  bool empty = false;        // no factorizations at all
};

struct HistogramBin {
  double lo = 0.0;
  double hi = 0.0;
  uint64_t count = 0;
  double density = 0.0;  // count / (total * width), so the areas sum to 1
};

struct HistogramData {
  std::vector<HistogramBin> bins;
  uint64_t total = 0;
  int64_t n = 0;
  bool empty = false;
};

// Actual-vs-predicted location and spread of the length distribution.
// Actual values come from the exact multiset: the median averages the two
// middle order statistics, the mode is the leftmost most frequent value, and
// the standard deviation is the population form sqrt(E[l^2] - E[l]^2).
// Predicted values are read off the limiting spline density.
struct StatSummary {
  double actual_mean = 0.0;
  double actual_median = 0.0;
  double actual_mode = 0.0;
  double actual_stdev = 0.0;
  double predicted_mean = 0.0;
  double predicted_median = 0.0;
  double predicted_mode = 0.0;
  double predicted_stdev = 0.0;
  BigInt total;
};

struct FStatReport {
  double actual = 0.0;
  double predicted = 0.0;
  double difference = 0.0;
};

// Integer weights only: the rows live on the integer length grid. Zero
// multiplicity rows are emitted by default so on-axis dots survive into the
// plot; pass include_zeros = false to drop them.
DotPlotData dot_plot(const GeneratorVector& gens, const std::vector<int64_t>& weights, int64_t n,
                     bool include_zeros = true, uint64_t capacity = default_capacity);

// Floating weights: equal-width bins over the observed range of l/n values.
// When all samples coincide at v the single bin [v - 1/2, v + 1/2] gets
// density 1.
HistogramData histogram(const GeneratorVector& gens, const std::vector<double>& weights, int64_t n,
                        int bins, uint64_t capacity = default_capacity);

StatSummary summary(const GeneratorVector& gens, const std::vector<Rational>& weights, int64_t n);

// Empirical mean of f(l/n) over factorizations with l/n in the interval,
// against the spline prediction integral of f * M over the same window.
FStatReport f_statistic(const GeneratorVector& gens, const std::vector<Rational>& weights,
                        int64_t n, const FunctionSpec& f,
                        const Interval& interval = Interval::whole());

}  // namespace semispline

#endif
