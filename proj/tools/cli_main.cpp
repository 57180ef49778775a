// Command line front end. Subcommands map 1:1 onto library calls and print
// exactly the library serialization, so scripted output and programmatic
// output can never drift apart.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semispline/bounds.hpp"
#include "semispline/bspline.hpp"
#include "semispline/io.hpp"
#include "semispline/partition.hpp"
#include "semispline/semigroup.hpp"
#include "semispline/stats.hpp"
#include "semispline/tpower.hpp"

namespace ss = semispline;

namespace {

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<int64_t> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<int64_t> out;
  for (const std::string& tok : split_commas(s)) {
    ss::Rational q = ss::parse_rational(tok);
    if (ss::denominator(q) != 1)
      throw ss::ParseError(what + ": expected integers, got \"" + tok + "\"");
    out.push_back(ss::numerator(q).convert_to<int64_t>());
  }
  return out;
}

std::vector<ss::Rational> parse_rat_list(const std::string& s) {
  std::vector<ss::Rational> out;
  for (const std::string& tok : split_commas(s)) out.push_back(ss::parse_rational(tok));
  return out;
}

ss::Interval parse_interval_arg(const std::string& s) {
  std::vector<std::string> parts = split_commas(s);
  if (parts.size() != 2)
    throw ss::ParseError("interval must be \"lo,hi\" (endpoints may be inf/-inf)");
  ss::Interval out;
  if (parts[0] != "-inf") out.lo = ss::parse_rational(parts[0]);
  if (parts[1] != "inf" && parts[1] != "+inf") out.hi = ss::parse_rational(parts[1]);
  if (out.lo && out.hi && *out.hi < *out.lo)
    throw ss::ParseError("interval endpoints out of order");
  return out;
}

// Options shared by most subcommands.
struct CommonOpts {
  std::string gens;
  std::string weights;
  int64_t n = 0;
  std::string format;  // empty = per-command default
  std::string out;
};

void emit(const CommonOpts& c, const std::string& bytes) {
  if (c.out.empty()) {
    std::cout << bytes;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw ss::InvalidArgument("cannot open output file " + c.out);
  f << bytes;
}

std::string json_bytes(const ss::json& j) { return j.dump(2) + "\n"; }

std::string pick_format(const CommonOpts& c, const std::string& fallback) {
  std::string f = c.format.empty() ? fallback : c.format;
  if (f != "json" && f != "csv") throw ss::ParseError("format must be json or csv");
  return f;
}

ss::GeneratorVector gens_of(const CommonOpts& c) {
  if (c.gens.empty()) throw ss::ParseError("--gens is required");
  return ss::GeneratorVector(parse_int_list(c.gens, "--gens"));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical semigroup length distributions and their spline limits"};
  app.require_subcommand(1);

  CommonOpts c;
  std::string knots_arg, eval_arg, interval_arg, function_arg, file_arg;
  bool use_explicit = false, float_knots = false;
  int bins = 0;
  int64_t m_arg = 0;
  bool m_given = false;
  uint64_t limit = ss::default_capacity;

  auto add_common = [&](CLI::App* sub, bool with_weights) {
    sub->add_option("--gens", c.gens, "comma separated positive generators");
    if (with_weights) sub->add_option("--weights", c.weights, "comma separated rational weights");
    sub->add_option("--n", c.n, "target value");
    sub->add_option("--format", c.format, "json or csv");
    sub->add_option("--out", c.out, "write to file instead of stdout");
    sub->add_option("--limit", limit, "capacity cap for enumeration/tables");
  };

  CLI::App* cmd_fact = app.add_subcommand("factorizations", "enumerate Z(n)");
  add_common(cmd_fact, false);

  CLI::App* cmd_count = app.add_subcommand("count", "cardinality of Z(n)");
  add_common(cmd_count, false);

  CLI::App* cmd_spline = app.add_subcommand("spline", "piecewise form or point values of M");
  cmd_spline->add_option("--knots", knots_arg, "comma separated knots (rationals)")->required();
  cmd_spline->add_option("--eval", eval_arg, "evaluate at x instead of expanding");
  cmd_spline->add_flag("--explicit", use_explicit, "use the distinct-knot closed form");
  cmd_spline->add_flag("--float", float_knots, "compute in doubles instead of rationals");
  cmd_spline->add_option("--format", c.format, "json or csv");
  cmd_spline->add_option("--out", c.out, "write to file instead of stdout");

  CLI::App* cmd_dist = app.add_subcommand("dist", "length distribution (dot plot or histogram)");
  add_common(cmd_dist, true);
  cmd_dist->add_option("--bins", bins, "bin count; selects the histogram path");
  bool no_zero_rows = false;
  cmd_dist->add_flag("--no-zero-rows", no_zero_rows, "drop zero-multiplicity dot rows");

  CLI::App* cmd_approx = app.add_subcommand("approx", "vpf against its spline approximations");
  add_common(cmd_approx, true);
  cmd_approx->add_option("--m", m_arg, "prescribed weighted length")->each([&](const std::string&) {
    m_given = true;
  });

  CLI::App* cmd_verify = app.add_subcommand("verify", "check the error bound inequalities");
  CLI::App* v_a = cmd_verify->add_subcommand("theorem-a", "counting form of the bound");
  CLI::App* v_b = cmd_verify->add_subcommand("theorem-b", "pointwise vpf bound");
  CLI::App* v_c = cmd_verify->add_subcommand("theorem-c", "smooth test function bound");
  for (CLI::App* v : {v_a, v_b, v_c}) {
    add_common(v, true);
    v->add_option("--file", file_arg, "JSON array of instance descriptors");
    v->add_option("--interval", interval_arg, "closed interval lo,hi");
    v->add_option("--function", function_arg, "test function name");
    v->add_option("--m", m_arg, "prescribed weighted length (theorem b)")
        ->each([&](const std::string&) { m_given = true; });
  }
  cmd_verify->require_subcommand(1);

  CLI::App* cmd_stats = app.add_subcommand("stats", "summary statistics or an f statistic");
  add_common(cmd_stats, true);
  cmd_stats->add_option("--interval", interval_arg, "closed interval lo,hi");
  cmd_stats->add_option("--function", function_arg, "test function name for the f statistic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_fact) {
      auto fs = ss::enumerate_factorizations(gens_of(c), c.n, limit);
      if (pick_format(c, "csv") == "json") {
        emit(c, json_bytes(ss::factorizations_to_json(fs)));
      } else {
        std::ostringstream os;
        ss::factorizations_to_csv(os, fs);
        emit(c, os.str());
      }
    } else if (*cmd_count) {
      ss::BigInt n = ss::count_factorizations(gens_of(c), c.n);
      if (pick_format(c, "csv") == "json") {
        emit(c, json_bytes(ss::json{{"count", n.str()}}));
      } else {
        emit(c, "count\n" + n.str() + "\n");
      }
    } else if (*cmd_spline) {
      if (float_knots) {
        std::vector<double> kv;
        for (const ss::Rational& q : parse_rat_list(knots_arg)) kv.push_back(ss::to_double(q));
        auto ks = ss::make_knots(kv);
        if (!eval_arg.empty()) {
          double x = ss::to_double(ss::parse_rational(eval_arg));
          double v = use_explicit ? ss::eval_explicit(ks, x) : ss::eval_recursive(ks, x);
          if (pick_format(c, "json") == "json")
            emit(c, json_bytes(ss::json{{"x", x}, {"value", v}}));
          else
            emit(c, "x,value\n" + ss::format_double(x) + "," + ss::format_double(v) + "\n");
        } else {
          auto pp = ss::piecewise_expand(ks);
          if (pick_format(c, "json") == "json") {
            emit(c, json_bytes(ss::pp_to_json(pp)));
          } else {
            std::ostringstream os;
            os << "piece,lo,hi,degree,coefficients\n";
            for (size_t j = 0; j < pp.pieces().size(); ++j) {
              os << j << "," << ss::format_double(pp.breakpoints()[j]) << ","
                 << ss::format_double(pp.breakpoints()[j + 1]) << ","
                 << (pp.pieces()[j].size() - 1) << ",";
              for (size_t t = 0; t < pp.pieces()[j].size(); ++t)
                os << (t ? ";" : "") << ss::format_double(pp.pieces()[j][t]);
              os << "\n";
            }
            emit(c, os.str());
          }
        }
      } else {
        auto ks = ss::make_knots(parse_rat_list(knots_arg));
        if (!eval_arg.empty()) {
          ss::Rational x = ss::parse_rational(eval_arg);
          ss::Rational v = use_explicit ? ss::eval_explicit(ks, x) : ss::eval_recursive(ks, x);
          if (pick_format(c, "json") == "json")
            emit(c, json_bytes(ss::json{{"x", ss::format_rational(x)},
                                        {"value", ss::format_rational(v)},
                                        {"value_double", ss::to_double(v)}}));
          else
            emit(c, "x,value\n" + ss::format_rational(x) + "," + ss::format_rational(v) + "\n");
        } else {
          auto pp = ss::piecewise_expand(ks);
          if (pick_format(c, "json") == "json") {
            emit(c, json_bytes(ss::pp_to_json(pp)));
          } else {
            std::ostringstream os;
            os << "piece,lo,hi,degree,coefficients\n";
            for (size_t j = 0; j < pp.pieces().size(); ++j) {
              os << j << "," << ss::format_rational(pp.breakpoints()[j]) << ","
                 << ss::format_rational(pp.breakpoints()[j + 1]) << ","
                 << (pp.pieces()[j].size() - 1) << ",";
              for (size_t t = 0; t < pp.pieces()[j].size(); ++t)
                os << (t ? ";" : "") << ss::format_rational(pp.pieces()[j][t]);
              os << "\n";
            }
            emit(c, os.str());
          }
        }
      }
    } else if (*cmd_dist) {
      ss::GeneratorVector gens = gens_of(c);
      if (c.weights.empty()) throw ss::ParseError("--weights is required");
      if (bins > 0) {
        std::vector<double> w;
        for (const ss::Rational& q : parse_rat_list(c.weights)) w.push_back(ss::to_double(q));
        ss::HistogramData h = ss::histogram(gens, w, c.n, bins, limit);
        if (pick_format(c, "csv") == "json") {
          emit(c, json_bytes(ss::histogram_to_json(h)));
        } else {
          std::ostringstream os;
          ss::histogram_to_csv(os, h);
          emit(c, os.str());
        }
      } else {
        std::vector<int64_t> w = parse_int_list(c.weights, "--weights");
        ss::DotPlotData p = ss::dot_plot(gens, w, c.n, !no_zero_rows, limit);
        if (pick_format(c, "csv") == "json") {
          emit(c, json_bytes(ss::dot_plot_to_json(p)));
        } else {
          std::ostringstream os;
          ss::dot_plot_to_csv(os, p);
          emit(c, os.str());
        }
      }
    } else if (*cmd_approx) {
      ss::GeneratorVector gens = gens_of(c);
      if (c.weights.empty()) throw ss::ParseError("--weights is required");
      if (!m_given) throw ss::ParseError("--m is required");
      ss::SystemMatrix<ss::Rational> A(parse_rat_list(c.weights), gens);
      ss::TargetPair b{m_arg, c.n};
      ss::BigInt exact = ss::vpf(A, b);
      ss::Rational tp = ss::vpf_approx(A, b);
      ss::Rational norm = ss::vpf_approx_normalized(A, b);
      ss::Rational diff = ss::Rational(exact) - tp;
      if (pick_format(c, "json") == "json") {
        emit(c, json_bytes(ss::json{{"vpf", exact.str()},
                                    {"tpower", ss::format_rational(tp)},
                                    {"tpower_value", ss::to_double(tp)},
                                    {"normalized", ss::format_rational(norm)},
                                    {"normalized_value", ss::to_double(norm)},
                                    {"difference", ss::format_rational(diff)},
                                    {"difference_value", ss::to_double(diff)}}));
      } else {
        emit(c, "vpf,tpower,normalized,difference\n" + exact.str() + "," +
                    ss::format_double(ss::to_double(tp)) + "," +
                    ss::format_double(ss::to_double(norm)) + "," +
                    ss::format_double(ss::to_double(diff)) + "\n");
      }
    } else if (*cmd_verify) {
      std::string theorem = (*v_a) ? "a" : (*v_b) ? "b" : "c";
      std::vector<ss::BoundReport> reports;
      if (!file_arg.empty()) {
        std::ifstream f(file_arg);
        if (!f) throw ss::InvalidArgument("cannot open descriptor file " + file_arg);
        ss::json doc;
        try {
          doc = ss::json::parse(f);
        } catch (const ss::json::parse_error& e) {
          throw ss::ParseError(std::string("descriptor file: ") + e.what());
        }
        for (const ss::InstanceDescriptor& d : ss::parse_descriptors(doc))
          reports.push_back(ss::run_descriptor(d, theorem));
      } else {
        if (c.gens.empty() || c.weights.empty())
          throw ss::ParseError("--gens and --weights are required when --file is not given");
        ss::InstanceDescriptor d;
        d.generators = parse_int_list(c.gens, "--gens");
        d.weights = parse_rat_list(c.weights);
        d.n = c.n;
        if (m_given) d.m = m_arg;
        if (!interval_arg.empty()) d.interval = parse_interval_arg(interval_arg);
        if (!function_arg.empty()) d.function = function_arg;
        reports.push_back(ss::run_descriptor(d, theorem));
      }
      if (pick_format(c, "json") == "json") {
        ss::json arr = ss::json::array();
        for (const auto& r : reports) arr.push_back(ss::report_to_json(r));
        emit(c, json_bytes(arr));
      } else {
        std::ostringstream os;
        ss::reports_to_csv(os, reports);
        emit(c, os.str());
      }
    } else if (*cmd_stats) {
      ss::GeneratorVector gens = gens_of(c);
      if (c.weights.empty()) throw ss::ParseError("--weights is required");
      std::vector<ss::Rational> w = parse_rat_list(c.weights);
      ss::Interval interval =
          interval_arg.empty() ? ss::Interval::whole() : parse_interval_arg(interval_arg);
      if (!function_arg.empty()) {
        ss::FunctionSpec f = ss::function_from_name(function_arg, interval);
        ss::FStatReport r = ss::f_statistic(gens, w, c.n, f, interval);
        if (pick_format(c, "csv") == "json") {
          emit(c, json_bytes(ss::f_stat_to_json(r)));
        } else {
          emit(c, "actual,predicted,difference\n" + ss::format_double(r.actual) + "," +
                      ss::format_double(r.predicted) + "," + ss::format_double(r.difference) +
                      "\n");
        }
      } else {
        ss::StatSummary s = ss::summary(gens, w, c.n);
        if (pick_format(c, "csv") == "json") {
          emit(c, json_bytes(ss::summary_to_json(s)));
        } else {
          std::ostringstream os;
          ss::summary_to_csv(os, s);
          emit(c, os.str());
        }
      }
    }
  } catch (const ss::ParseError& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
    return 2;
  } catch (const ss::Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
