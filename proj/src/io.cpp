#include "semispline/io.hpp"

#include <ostream>

#include "semispline/partition.hpp"
#include "semispline/tpower.hpp"

namespace semispline {

namespace {

json rational_array(const std::vector<Rational>& v) {
  json a = json::array();
  for (const Rational& q : v) a.push_back(format_rational(q));
  return a;
}

json double_array(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(x);
  return a;
}

Rational rational_from_json(const json& j, const std::string& context) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(context + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<int64_t>());
  if (j.is_number_float()) return rational_from_double(j.get<double>());
  throw ParseError(context + ": expected a rational (number or \"p/q\" string)");
}

int64_t integer_from_json(const json& j, const std::string& context) {
  if (j.is_number_integer()) return j.get<int64_t>();
  if (j.is_string()) {
    Rational q = parse_rational(j.get<std::string>());
    if (denominator(q) != 1) throw ParseError(context + ": expected an integer");
    return numerator(q).convert_to<int64_t>();
  }
  throw ParseError(context + ": expected an integer");
}

}  // namespace

json pp_to_json(const PiecewisePolynomial<Rational>& p) {
  json pieces = json::array();
  for (const auto& piece : p.pieces()) pieces.push_back(rational_array(piece));
  return json{{"kind", "rational"},
              {"breakpoints", rational_array(p.breakpoints())},
              {"pieces", pieces}};
}

json pp_to_json(const PiecewisePolynomial<double>& p) {
  json pieces = json::array();
  for (const auto& piece : p.pieces()) pieces.push_back(double_array(piece));
  return json{{"kind", "float"},
              {"breakpoints", double_array(p.breakpoints())},
              {"pieces", pieces}};
}

PiecewisePolynomial<Rational> rational_pp_from_json(const json& j) {
  if (!j.is_object() || j.value("kind", "") != "rational")
    throw ParseError("piecewise polynomial: expected kind \"rational\"");
  std::vector<Rational> bps;
  for (const auto& b : j.at("breakpoints")) bps.push_back(rational_from_json(b, "breakpoints"));
  std::vector<std::vector<Rational>> pieces;
  for (const auto& piece : j.at("pieces")) {
    std::vector<Rational> c;
    for (const auto& v : piece) c.push_back(rational_from_json(v, "pieces"));
    pieces.push_back(std::move(c));
  }
  return PiecewisePolynomial<Rational>(std::move(bps), std::move(pieces));
}

PiecewisePolynomial<double> float_pp_from_json(const json& j) {
  if (!j.is_object() || j.value("kind", "") != "float")
    throw ParseError("piecewise polynomial: expected kind \"float\"");
  std::vector<double> bps = j.at("breakpoints").get<std::vector<double>>();
  std::vector<std::vector<double>> pieces =
      j.at("pieces").get<std::vector<std::vector<double>>>();
  return PiecewisePolynomial<double>(std::move(bps), std::move(pieces));
}

json factorizations_to_json(const std::vector<Factorization>& fs) {
  json arr = json::array();
  for (const auto& f : fs) arr.push_back(f.coords);
  return json{{"count", std::to_string(fs.size())}, {"factorizations", arr}};
}

json multiset_to_json(const LengthMultiset& dist) {
  json counts = json::object();
  for (const auto& [len, mult] : dist.counts) counts[format_rational(len)] = mult.str();
  return json{{"total", dist.total.str()}, {"counts", counts}};
}

json report_to_json(const BoundReport& rep) {
  return json{{"theorem", rep.theorem}, {"instance", rep.instance},
              {"lhs", rep.lhs},         {"bound", rep.bound},
              {"slack", rep.slack},     {"pass", rep.pass},
              {"exact", rep.exact},     {"constants", rep.constants},
              {"note", rep.note}};
}

json dot_plot_to_json(const DotPlotData& plot) {
  json rows = json::array();
  for (const auto& r : plot.rows)
    rows.push_back(json{{"ell", r.ell},
                        {"position", format_rational(r.position)},
                        {"height", format_rational(r.height)},
                        {"multiplicity", r.multiplicity.str()}});
  return json{{"n", plot.n}, {"total", plot.total.str()}, {"empty", plot.empty}, {"rows", rows}};
}

json histogram_to_json(const HistogramData& hist) {
  json bins = json::array();
  for (const auto& b : hist.bins)
    bins.push_back(json{{"lo", b.lo}, {"hi", b.hi}, {"count", b.count}, {"density", b.density}});
  return json{{"n", hist.n}, {"total", hist.total}, {"empty", hist.empty}, {"bins", bins}};
}

json summary_to_json(const StatSummary& s) {
  return json{{"total", s.total.str()},
              {"actual", json{{"mean", s.actual_mean},
                              {"median", s.actual_median},
                              {"mode", s.actual_mode},
                              {"stdev", s.actual_stdev}}},
              {"predicted", json{{"mean", s.predicted_mean},
                                 {"median", s.predicted_median},
                                 {"mode", s.predicted_mode},
                                 {"stdev", s.predicted_stdev}}}};
}

json f_stat_to_json(const FStatReport& r) {
  return json{{"actual", r.actual}, {"predicted", r.predicted}, {"difference", r.difference}};
}

void factorizations_to_csv(std::ostream& os, const std::vector<Factorization>& fs) {
  size_t k = fs.empty() ? 0 : fs.front().coords.size();
  for (size_t i = 0; i < k; ++i) os << (i ? "," : "") << "x" << (i + 1);
  if (k == 0) os << "x1";  // header even for an empty set
  os << "\n";
  for (const auto& f : fs) {
    for (size_t i = 0; i < f.coords.size(); ++i) os << (i ? "," : "") << f.coords[i];
    os << "\n";
  }
}

void dot_plot_to_csv(std::ostream& os, const DotPlotData& plot) {
  os << "position,height\n";
  for (const auto& r : plot.rows)
    os << format_double(to_double(r.position)) << "," << format_double(to_double(r.height))
       << "\n";
}

void histogram_to_csv(std::ostream& os, const HistogramData& hist) {
  os << "bin_left,bin_right,density\n";
  for (const auto& b : hist.bins)
    os << format_double(b.lo) << "," << format_double(b.hi) << "," << format_double(b.density)
       << "\n";
}

void summary_to_csv(std::ostream& os, const StatSummary& s) {
  os << "statistic,actual,predicted\n";
  os << "mean," << format_double(s.actual_mean) << "," << format_double(s.predicted_mean) << "\n";
  os << "median," << format_double(s.actual_median) << "," << format_double(s.predicted_median)
     << "\n";
  os << "mode," << format_double(s.actual_mode) << "," << format_double(s.predicted_mode) << "\n";
  os << "stdev," << format_double(s.actual_stdev) << "," << format_double(s.predicted_stdev)
     << "\n";
}

void reports_to_csv(std::ostream& os, const std::vector<BoundReport>& reps) {
  os << "theorem,instance,lhs,bound,slack,pass\n";
  for (const auto& r : reps) {
    std::string instance = r.instance;
    for (char& c : instance)
      if (c == ',') c = ';';  // keep the CSV single-delimiter
    os << r.theorem << "," << instance << "," << format_double(r.lhs) << ","
       << format_double(r.bound) << "," << format_double(r.slack) << ","
       << (r.pass ? "true" : "false") << "\n";
  }
}

Interval parse_interval_json(const json& j, const std::string& context) {
  if (!j.is_array() || j.size() != 2)
    throw ParseError(context + ": interval must be a two-element array");
  Interval out;
  auto side = [&](const json& e, bool is_lo) -> std::optional<Rational> {
    if (e.is_string()) {
      const std::string s = e.get<std::string>();
      if (s == "inf" || s == "+inf") {
        if (is_lo) throw ParseError(context + ": lower endpoint cannot be +inf");
        return std::nullopt;
      }
      if (s == "-inf") {
        if (!is_lo) throw ParseError(context + ": upper endpoint cannot be -inf");
        return std::nullopt;
      }
    }
    return rational_from_json(e, context);
  };
  out.lo = side(j[0], true);
  out.hi = side(j[1], false);
  if (out.lo && out.hi && *out.hi < *out.lo)
    throw ParseError(context + ": interval endpoints out of order");
  return out;
}

InstanceDescriptor parse_descriptor(const json& j, const std::string& context) {
  if (!j.is_object()) throw ParseError(context + ": descriptor must be an object");
  static const std::vector<std::string> known = {"theorem",  "generators", "weights", "n",
                                                 "m",        "interval",   "function", "bins"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool ok = false;
    for (const auto& k : known)
      if (k == key) { ok = true; break; }
    if (!ok) throw ParseError(context + ": unknown key \"" + key + "\"");
  }

  InstanceDescriptor d;
  if (j.contains("theorem")) {
    std::string t = j.at("theorem").is_string() ? j.at("theorem").get<std::string>() : "";
    if (t != "a" && t != "b" && t != "c")
      throw ParseError(context + ".theorem: expected \"a\", \"b\" or \"c\"");
    d.theorem = t;
  }
  if (!j.contains("generators") || !j.at("generators").is_array())
    throw ParseError(context + ".generators: expected an array");
  {
    size_t i = 0;
    for (const auto& g : j.at("generators"))
      d.generators.push_back(
          integer_from_json(g, context + ".generators[" + std::to_string(i++) + "]"));
  }
  if (!j.contains("weights") || !j.at("weights").is_array())
    throw ParseError(context + ".weights: expected an array");
  {
    size_t i = 0;
    for (const auto& w : j.at("weights"))
      d.weights.push_back(
          rational_from_json(w, context + ".weights[" + std::to_string(i++) + "]"));
  }
  if (!j.contains("n")) throw ParseError(context + ".n: required");
  d.n = integer_from_json(j.at("n"), context + ".n");
  if (j.contains("m")) d.m = integer_from_json(j.at("m"), context + ".m");
  if (j.contains("interval"))
    d.interval = parse_interval_json(j.at("interval"), context + ".interval");
  if (j.contains("function")) {
    if (!j.at("function").is_string())
      throw ParseError(context + ".function: expected a string");
    d.function = j.at("function").get<std::string>();
  }
  if (j.contains("bins")) {
    int64_t b = integer_from_json(j.at("bins"), context + ".bins");
    if (b < 1 || b > 1000000) throw ParseError(context + ".bins: out of range");
    d.bins = static_cast<int>(b);
  }
  return d;
}

std::vector<InstanceDescriptor> parse_descriptors(const json& j) {
  if (!j.is_array()) throw ParseError("descriptors: expected a JSON array");
  std::vector<InstanceDescriptor> out;
  for (size_t i = 0; i < j.size(); ++i)
    out.push_back(parse_descriptor(j[i], "descriptors[" + std::to_string(i) + "]"));
  return out;
}

BoundReport run_descriptor(const InstanceDescriptor& d, const std::string& theorem) {
  std::string t = d.theorem.value_or(theorem);
  if (t.empty()) throw ParseError("descriptor carries no theorem tag");
  GeneratorVector gens(d.generators);
  Interval interval = d.interval.value_or(Interval::whole());
  if (t == "a") return check_theorem_a(gens, d.weights, d.n, interval);
  if (t == "b") {
    if (!d.m) throw ParseError("theorem b descriptor needs the field \"m\"");
    return check_theorem_b(SystemMatrix<Rational>(d.weights, gens), TargetPair{*d.m, d.n});
  }
  if (t == "c") {
    FunctionSpec f = function_from_name(d.function.value_or("power"), interval);
    return check_theorem_c(gens, d.weights, d.n, interval, f);
  }
  throw ParseError("unknown theorem tag \"" + t + "\"");
}

}  // namespace semispline
