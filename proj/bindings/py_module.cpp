// Python bindings. Exact values cross the boundary as strings ("p/q" for
// rationals, decimal strings for big integers become Python ints); floating
// values stay doubles. Structured results come back as plain dicts built from
// the library's own JSON serialization.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "semispline/bounds.hpp"
#include "semispline/bspline.hpp"
#include "semispline/io.hpp"
#include "semispline/lattice.hpp"
#include "semispline/partition.hpp"
#include "semispline/semigroup.hpp"
#include "semispline/stats.hpp"
#include "semispline/tpower.hpp"

namespace py = pybind11;
namespace ss = semispline;

namespace {

py::object py_bigint(const ss::BigInt& v) {
  return py::module_::import("builtins").attr("int")(v.str());
}

py::object py_from_json(const ss::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

ss::Rational rat_of(const py::object& o) {
  if (py::isinstance<py::str>(o)) return ss::parse_rational(o.cast<std::string>());
  if (py::isinstance<py::int_>(o)) return ss::Rational(o.cast<int64_t>());
  if (py::isinstance<py::float_>(o)) return ss::rational_from_double(o.cast<double>());
  throw ss::ParseError("expected int, float or \"p/q\" string");
}

std::vector<ss::Rational> rats_of(const py::sequence& seq) {
  std::vector<ss::Rational> out;
  for (const auto& o : seq) out.push_back(rat_of(py::reinterpret_borrow<py::object>(o)));
  return out;
}

ss::GeneratorVector gens_of(const std::vector<int64_t>& g) { return ss::GeneratorVector(g); }

ss::Interval interval_of(const py::object& o) {
  if (o.is_none()) return ss::Interval::whole();
  py::sequence seq = o.cast<py::sequence>();
  if (py::len(seq) != 2) throw ss::ParseError("interval must be a pair");
  ss::Interval out;
  py::object lo = seq[0], hi = seq[1];
  if (!lo.is_none()) out.lo = rat_of(lo);
  if (!hi.is_none()) out.hi = rat_of(hi);
  return out;
}

ss::KnotSequence<ss::Rational> knots_of(const py::sequence& seq) {
  return ss::make_knots(rats_of(seq));
}

}  // namespace

PYBIND11_MODULE(semispline, mod) {
  mod.doc() = "factorization length distributions of numerical semigroups and "
              "their B-spline limits";

  static py::exception<ss::Error> exc(mod, "DomainError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ss::Error& e) {
      py::set_error(exc, ((e.kind() + ": ") + e.what()).c_str());
    }
  });

  mod.def("count_factorizations",
          [](const std::vector<int64_t>& gens, int64_t n) {
            return py_bigint(ss::count_factorizations(gens_of(gens), n));
          },
          py::arg("gens"), py::arg("n"));

  mod.def("enumerate_factorizations",
          [](const std::vector<int64_t>& gens, int64_t n, uint64_t limit) {
            std::vector<std::vector<int64_t>> out;
            for (auto& f : ss::enumerate_factorizations(gens_of(gens), n, limit))
              out.push_back(std::move(f.coords));
            return out;
          },
          py::arg("gens"), py::arg("n"), py::arg("limit") = ss::default_capacity);

  mod.def("weighted_lengths",
          [](const std::vector<int64_t>& gens, const py::sequence& weights, int64_t n) {
            ss::LengthMultiset dist = ss::weighted_lengths(gens_of(gens), rats_of(weights), n);
            py::dict out;
            for (const auto& [len, mult] : dist.counts)
              out[py::str(ss::format_rational(len))] = py_bigint(mult);
            return out;
          },
          py::arg("gens"), py::arg("weights"), py::arg("n"));

  mod.def("spline_expand",
          [](const py::sequence& knots) {
            return py_from_json(ss::pp_to_json(ss::piecewise_expand(knots_of(knots))));
          },
          py::arg("knots"));

  mod.def("spline_eval",
          [](const py::sequence& knots, const py::object& x, bool use_explicit) {
            auto ks = knots_of(knots);
            ss::Rational xv = rat_of(x);
            ss::Rational v = use_explicit ? ss::eval_explicit(ks, xv) : ss::eval_recursive(ks, xv);
            return ss::format_rational(v);
          },
          py::arg("knots"), py::arg("x"), py::arg("use_explicit") = false);

  mod.def("spline_integrate",
          [](const py::sequence& knots, const py::object& lo, const py::object& hi) {
            auto pp = ss::piecewise_expand(knots_of(knots));
            std::optional<ss::Rational> a, b;
            if (!lo.is_none()) a = rat_of(lo);
            if (!hi.is_none()) b = rat_of(hi);
            return ss::format_rational(pp.integrate(a, b));
          },
          py::arg("knots"), py::arg("lo") = py::none(), py::arg("hi") = py::none());

  mod.def("spline_moment",
          [](const py::sequence& knots, unsigned r) {
            return ss::format_rational(ss::piecewise_expand(knots_of(knots)).moment(r));
          },
          py::arg("knots"), py::arg("r"));

  mod.def("spline_quantile",
          [](const py::sequence& knots, double p) {
            return ss::piecewise_expand(knots_of(knots)).quantile(p);
          },
          py::arg("knots"), py::arg("p"));

  mod.def("spline_mode",
          [](const py::sequence& knots) {
            return ss::format_rational(ss::piecewise_expand(knots_of(knots)).mode());
          },
          py::arg("knots"));

  mod.def("spline_lipschitz",
          [](const py::sequence& knots, const py::object& lo, const py::object& hi) {
            auto pp = ss::piecewise_expand(knots_of(knots));
            std::optional<ss::Rational> a, b;
            if (!lo.is_none()) a = rat_of(lo);
            if (!hi.is_none()) b = rat_of(hi);
            return ss::format_rational(pp.lipschitz_bound(a, b));
          },
          py::arg("knots"), py::arg("lo") = py::none(), py::arg("hi") = py::none());

  mod.def("truncated_power",
          [](const py::sequence& weights, const std::vector<int64_t>& gens, const py::object& m,
             const py::object& n) {
            ss::SystemMatrix<ss::Rational> A(rats_of(weights), gens_of(gens));
            return ss::format_rational(ss::truncated_power(A, rat_of(m), rat_of(n)));
          },
          py::arg("weights"), py::arg("gens"), py::arg("m"), py::arg("n"));

  mod.def("vpf",
          [](const py::sequence& weights, const std::vector<int64_t>& gens, int64_t m, int64_t n) {
            ss::SystemMatrix<ss::Rational> A(rats_of(weights), gens_of(gens));
            return py_bigint(ss::vpf(A, ss::TargetPair{m, n}));
          },
          py::arg("weights"), py::arg("gens"), py::arg("m"), py::arg("n"));

  mod.def("vpf_approx",
          [](const py::sequence& weights, const std::vector<int64_t>& gens, int64_t m, int64_t n) {
            ss::SystemMatrix<ss::Rational> A(rats_of(weights), gens_of(gens));
            return ss::format_rational(ss::vpf_approx(A, ss::TargetPair{m, n}));
          },
          py::arg("weights"), py::arg("gens"), py::arg("m"), py::arg("n"));

  mod.def("length_count",
          [](const std::vector<int64_t>& gens, const std::vector<int64_t>& weights, int64_t n,
             int64_t m) { return py_bigint(ss::length_count(gens_of(gens), weights, n, m)); },
          py::arg("gens"), py::arg("weights"), py::arg("n"), py::arg("m"));

  mod.def("is_unimodular",
          [](const std::vector<int64_t>& weights, const std::vector<int64_t>& gens) {
            return ss::is_unimodular(weights, gens_of(gens));
          },
          py::arg("weights"), py::arg("gens"));

  mod.def("delta_gcd",
          [](const std::vector<int64_t>& gens) { return ss::delta_gcd(gens_of(gens)); },
          py::arg("gens"));

  mod.def("is_primitive_vector",
          [](const std::vector<int64_t>& gens) { return ss::is_primitive_vector(gens_of(gens)); },
          py::arg("gens"));

  mod.def("e1", &ss::e1, py::arg("k"));
  mod.def("e2", &ss::e2, py::arg("k"));

  mod.def("check_theorem_a",
          [](const std::vector<int64_t>& gens, const py::sequence& weights, int64_t n,
             const py::object& interval) {
            return py_from_json(ss::report_to_json(
                ss::check_theorem_a(gens_of(gens), rats_of(weights), n, interval_of(interval))));
          },
          py::arg("gens"), py::arg("weights"), py::arg("n"), py::arg("interval") = py::none());

  mod.def("check_theorem_b",
          [](const py::sequence& weights, const std::vector<int64_t>& gens, int64_t m, int64_t n) {
            ss::SystemMatrix<ss::Rational> A(rats_of(weights), gens_of(gens));
            return py_from_json(ss::report_to_json(ss::check_theorem_b(A, ss::TargetPair{m, n})));
          },
          py::arg("weights"), py::arg("gens"), py::arg("m"), py::arg("n"));

  mod.def("check_theorem_c",
          [](const std::vector<int64_t>& gens, const py::sequence& weights, int64_t n,
             const py::object& interval, const std::string& function) {
            ss::Interval iv = interval_of(interval);
            ss::FunctionSpec f = ss::function_from_name(function, iv);
            return py_from_json(
                ss::report_to_json(ss::check_theorem_c(gens_of(gens), rats_of(weights), n, iv, f)));
          },
          py::arg("gens"), py::arg("weights"), py::arg("n"), py::arg("interval") = py::none(),
          py::arg("function") = "power");

  mod.def("summary",
          [](const std::vector<int64_t>& gens, const py::sequence& weights, int64_t n) {
            return py_from_json(ss::summary_to_json(ss::summary(gens_of(gens), rats_of(weights), n)));
          },
          py::arg("gens"), py::arg("weights"), py::arg("n"));

  mod.def("f_statistic",
          [](const std::vector<int64_t>& gens, const py::sequence& weights, int64_t n,
             const std::string& function, const py::object& interval) {
            ss::Interval iv = interval_of(interval);
            ss::FunctionSpec f = ss::function_from_name(function, iv);
            return py_from_json(
                ss::f_stat_to_json(ss::f_statistic(gens_of(gens), rats_of(weights), n, f, iv)));
          },
          py::arg("gens"), py::arg("weights"), py::arg("n"), py::arg("function"),
          py::arg("interval") = py::none());

  mod.def("dot_plot",
          [](const std::vector<int64_t>& gens, const std::vector<int64_t>& weights, int64_t n,
             bool include_zeros) {
            return py_from_json(
                ss::dot_plot_to_json(ss::dot_plot(gens_of(gens), weights, n, include_zeros)));
          },
          py::arg("gens"), py::arg("weights"), py::arg("n"), py::arg("include_zeros") = true);

  mod.def("histogram",
          [](const std::vector<int64_t>& gens, const std::vector<double>& weights, int64_t n,
             int bins) {
            return py_from_json(
                ss::histogram_to_json(ss::histogram(gens_of(gens), weights, n, bins)));
          },
          py::arg("gens"), py::arg("weights"), py::arg("n"), py::arg("bins"));
}
