#ifndef SEMISPLINE_IO_HPP
#define SEMISPLINE_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "semispline/bounds.hpp"
#include "semispline/interval.hpp"
#include "semispline/piecewise.hpp"
#include "semispline/semigroup.hpp"
#include "semispline/stats.hpp"

namespace semispline {

using nlohmann::json;

// JSON conventions: rationals are "p/q" strings (or "p" for integers), big
// integers are decimal strings, floating values are plain JSON numbers.
// nlohmann keeps object keys sorted, so serialization is deterministic.

json pp_to_json(const PiecewisePolynomial<Rational>& p);
json pp_to_json(const PiecewisePolynomial<double>& p);
PiecewisePolynomial<Rational> rational_pp_from_json(const json& j);
PiecewisePolynomial<double> float_pp_from_json(const json& j);

json factorizations_to_json(const std::vector<Factorization>& fs);
json multiset_to_json(const LengthMultiset& dist);
json report_to_json(const BoundReport& rep);
json dot_plot_to_json(const DotPlotData& plot);
json histogram_to_json(const HistogramData& hist);
json summary_to_json(const StatSummary& s);
json f_stat_to_json(const FStatReport& r);

// CSV mirrors, always with a header row.
void factorizations_to_csv(std::ostream& os, const std::vector<Factorization>& fs);
void dot_plot_to_csv(std::ostream& os, const DotPlotData& plot);      // position,height
void histogram_to_csv(std::ostream& os, const HistogramData& hist);   // bin_left,bin_right,density
void summary_to_csv(std::ostream& os, const StatSummary& s);
void reports_to_csv(std::ostream& os, const std::vector<BoundReport>& reps);

// One verification instance, as read from a descriptor file. Unknown keys are
// rejected so typos fail loudly.
struct InstanceDescriptor {
  std::optional<std::string> theorem;  // "a" | "b" | "c"
  std::vector<int64_t> generators;
  std::vector<Rational> weights;
  int64_t n = 0;
  std::optional<int64_t> m;
  std::optional<Interval> interval;
  std::optional<std::string> function;
  std::optional<int> bins;
};

// [lo, hi] where each endpoint is a number, a "p/q" string, "inf" or "-inf".
Interval parse_interval_json(const json& j, const std::string& context);

InstanceDescriptor parse_descriptor(const json& j, const std::string& context);
std::vector<InstanceDescriptor> parse_descriptors(const json& j);

// Dispatch one descriptor to the matching checker (the theorem field, or the
// explicit argument when the descriptor leaves it unset).
BoundReport run_descriptor(const InstanceDescriptor& d, const std::string& theorem);

}  // namespace semispline

#endif
