#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "semispline/io.hpp"

using namespace semispline;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

// stdout and exit code of one CLI invocation; stderr folds in when asked
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(SEMISPLINE_CLI_PATH) + " " + args +
                    (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* p = popen(cmd.c_str(), "r");
  RunResult r;
  if (!p) return r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int status = pclose(p);
  if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
  return r;
}

std::string json_bytes(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("+5") == Rational(5));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("-0.5") == Rational(-1, 2));
  CHECK(parse_rational(".25") == Rational(1, 4));
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK(parse_rational("6/-4") == Rational(-3, 2));

  CHECK(format_rational(Rational(1, 2)) == "1/2");
  CHECK(format_rational(Rational(-3)) == "-3");
  CHECK(format_rational(Rational(0)) == "0");
  CHECK(format_rational(parse_rational("2/4")) == "1/2");
  // canonical both ways
  for (const char* s : {"22/7", "-1/3", "17", "0"})
    CHECK(format_rational(parse_rational(s)) == s);

  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
  CHECK_THROWS_AS(parse_rational("1e3"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("1."), ParseError);
}

TEST_CASE("shortest round-trip double formatting") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-0.0) == "-0");
  CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
  for (double x : {0.1, 1e300, -2.5e-7, 3.141592653589793, 546.687050359712}) {
    CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
  }
}

TEST_CASE("interval json parsing") {
  auto i = parse_interval_json(json::array({"1/2", "3/4"}), "t");
  CHECK(i.lo == Rational(1, 2));
  CHECK(i.hi == Rational(3, 4));
  CHECK(i.contains(Rational(2, 3)));
  CHECK_FALSE(i.contains(Rational(1)));

  auto whole = parse_interval_json(json::array({"-inf", "inf"}), "t");
  CHECK_FALSE(whole.lo.has_value());
  CHECK_FALSE(whole.hi.has_value());
  CHECK(whole.contains(Rational(-1000000)));

  auto mixed = parse_interval_json(json::array({0.25, "2"}), "t");
  CHECK(mixed.lo == Rational(1, 4));

  CHECK_THROWS_AS(parse_interval_json(json::array({"1"}), "t"), ParseError);
  CHECK_THROWS_AS(parse_interval_json(json::array({"2", "1"}), "t"), ParseError);
  CHECK_THROWS_AS(parse_interval_json(json::array({"inf", "2"}), "t"), ParseError);
  try {
    parse_interval_json(json::array({"x", "2"}), "somewhere.interval");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("somewhere.interval") != std::string::npos);
  }
}

TEST_CASE("descriptor parsing") {
  json good = {{"theorem", "b"},
               {"generators", {3, 4, 6}},
               {"weights", {"2", "3", "3"}},
               {"n", 40},
               {"m", 25}};
  auto d = parse_descriptor(good, "d");
  CHECK(d.theorem == "b");
  CHECK(d.generators == std::vector<int64_t>{3, 4, 6});
  CHECK(d.weights == std::vector<Rational>{2, 3, 3});
  CHECK(d.n == 40);
  REQUIRE(d.m.has_value());
  CHECK(*d.m == 25);
  CHECK_FALSE(d.interval.has_value());

  json c = {{"theorem", "c"},
            {"generators", {6, 9, 20}},
            {"weights", {1, 1, 1}},
            {"n", 500},
            {"interval", {"1/10", "3/10"}},
            {"function", "exp-sin-sq"}};
  auto dc = parse_descriptor(c, "d");
  CHECK(dc.function == "exp-sin-sq");
  REQUIRE(dc.interval.has_value());
  CHECK(dc.interval->lo == Rational(1, 10));

  auto fail_with = [](json j, const std::string& needle) {
    try {
      parse_descriptor(j, "descriptors[0]");
      FAIL_CHECK("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  json typo = good;
  typo["generatrs"] = json::array({1});
  fail_with(typo, "unknown key \"generatrs\"");
  json no_n = good;
  no_n.erase("n");
  fail_with(no_n, "descriptors[0].n");
  json bad_theorem = good;
  bad_theorem["theorem"] = "d";
  fail_with(bad_theorem, ".theorem");
  json bad_bins = good;
  bad_bins["bins"] = 0;
  fail_with(bad_bins, ".bins");
  json frac_n = good;
  frac_n["n"] = "1/2";
  fail_with(frac_n, ".n");

  CHECK_THROWS_AS(parse_descriptors(json::object()), ParseError);
  CHECK(parse_descriptors(json::array({good, c})).size() == 2);
}

TEST_CASE("descriptor dispatch") {
  InstanceDescriptor d;
  d.generators = {3, 4, 6};
  d.weights = {2, 3, 3};
  d.n = 40;
  CHECK_THROWS_AS(run_descriptor(d, "b"), ParseError);  // b needs m
  d.m = 25;
  auto rep = run_descriptor(d, "b");
  CHECK(rep.theorem == "B");
  CHECK(rep.pass);
  // the embedded tag wins over the dispatch argument
  d.theorem = "a";
  d.interval = Interval::whole();
  CHECK(run_descriptor(d, "b").theorem == "A");
}

TEST_CASE("piecewise json round trip") {
  auto pp = piecewise_expand(make_knots(
      std::vector<Rational>{Rational(1, 20), Rational(1, 9), Rational(1, 6)}));
  json j = pp_to_json(pp);
  CHECK(j.at("kind") == "rational");
  auto back = rational_pp_from_json(j);
  CHECK(back.breakpoints() == pp.breakpoints());
  CHECK(back.pieces() == pp.pieces());
  CHECK(json_bytes(pp_to_json(back)) == json_bytes(j));

  auto fpp = piecewise_expand(make_knots(std::vector<double>{0.05, 1.0 / 9, 1.0 / 6}));
  json fj = pp_to_json(fpp);
  CHECK(fj.at("kind") == "float");
  auto fback = float_pp_from_json(fj);
  CHECK(fback.breakpoints() == fpp.breakpoints());
  CHECK(fback.pieces() == fpp.pieces());

  CHECK_THROWS_AS(rational_pp_from_json(fj), ParseError);
  CHECK_THROWS_AS(float_pp_from_json(j), ParseError);
}

TEST_CASE("csv headers are stable") {
  GeneratorVector g({2, 3, 5, 8});
  auto first_line = [](const std::string& s) { return s.substr(0, s.find('\n')); };

  std::ostringstream fs;
  factorizations_to_csv(fs, enumerate_factorizations(g, 9));
  CHECK(first_line(fs.str()) == "x1,x2,x3,x4");

  std::ostringstream ds;
  dot_plot_to_csv(ds, dot_plot(g, {1, 1, 1, 1}, 9));
  CHECK(first_line(ds.str()) == "position,height");

  std::ostringstream hs;
  histogram_to_csv(hs, histogram(GeneratorVector({6, 9, 20}), {1.0, 1.0, 1.0}, 100, 5));
  CHECK(first_line(hs.str()) == "bin_left,bin_right,density");

  std::ostringstream ss;
  summary_to_csv(ss, summary(GeneratorVector({6, 9, 20}), {1, 1, 1}, 100));
  CHECK(first_line(ss.str()) == "statistic,actual,predicted");

  std::ostringstream rs;
  reports_to_csv(rs, {check_theorem_a(GeneratorVector({6, 9, 20}), {1, 1, 1}, 100,
                                      Interval::whole())});
  CHECK(first_line(rs.str()) == "theorem,instance,lhs,bound,slack,pass");
}

TEST_CASE("serialization is deterministic") {
  GeneratorVector g({3, 4, 6});
  auto once = json_bytes(dot_plot_to_json(dot_plot(g, {2, 3, 3}, 40)));
  auto twice = json_bytes(dot_plot_to_json(dot_plot(g, {2, 3, 3}, 40)));
  CHECK(once == twice);
  std::ostringstream a, b;
  summary_to_csv(a, summary(g, {2, 3, 3}, 40));
  summary_to_csv(b, summary(g, {2, 3, 3}, 40));
  CHECK(a.str() == b.str());
}

TEST_CASE("cli output matches the library serialization byte for byte") {
  auto count = run_cli("count --gens 6,9,20 --n 100 --format json");
  CHECK(count.code == 0);
  CHECK(count.out ==
        json_bytes(json{{"count", count_factorizations(GeneratorVector({6, 9, 20}), 100).str()}}));

  auto spline = run_cli("spline --knots 1/20,1/9,1/6 --format json");
  CHECK(spline.code == 0);
  auto pp = piecewise_expand(make_knots(
      std::vector<Rational>{Rational(1, 20), Rational(1, 9), Rational(1, 6)}));
  CHECK(spline.out == json_bytes(pp_to_json(pp)));

  auto dist = run_cli("dist --gens 2,3,5,8 --weights 1,1,1,1 --n 9");
  CHECK(dist.code == 0);
  std::ostringstream ds;
  dot_plot_to_csv(ds, dot_plot(GeneratorVector({2, 3, 5, 8}), {1, 1, 1, 1}, 9));
  CHECK(dist.out == ds.str());

  auto verify = run_cli("verify theorem-b --gens 3,4,6 --weights 2,3,3 --n 40 --m 25");
  CHECK(verify.code == 0);
  json arr = json::array();
  arr.push_back(report_to_json(check_theorem_b(
      SystemMatrix<Rational>({2, 3, 3}, GeneratorVector({3, 4, 6})), TargetPair{25, 40})));
  CHECK(verify.out == json_bytes(arr));
}

TEST_CASE("cli spline evaluation modes agree") {
  auto rec = run_cli("spline --knots 1/20,1/9,1/6 --eval 1/9 --format json");
  auto exp = run_cli("spline --knots 1/20,1/9,1/6 --eval 1/9 --explicit --format json");
  CHECK(rec.code == 0);
  CHECK(exp.code == 0);
  CHECK(json::parse(rec.out).at("value") == "120/7");
  CHECK(json::parse(rec.out) == json::parse(exp.out));
}

TEST_CASE("cli writes --out files identical to stdout") {
  std::string path = "/tmp/semispline_cli_out_test.json";
  std::remove(path.c_str());
  auto direct = run_cli("count --gens 6,9,20 --n 200 --format json");
  auto filed = run_cli("count --gens 6,9,20 --n 200 --format json --out " + path);
  CHECK(filed.code == 0);
  CHECK(filed.out.empty());
  std::ifstream f(path);
  std::stringstream body;
  body << f.rdbuf();
  CHECK(body.str() == direct.out);
  std::remove(path.c_str());
}

TEST_CASE("cli exit codes separate usage errors from domain errors") {
  CHECK(run_cli("count --gens 6,9,20 --n 100").code == 0);
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("count --gens 6,9,x --n 100").code == 2);     // parse error
  CHECK(run_cli("no-such-command").code == 2);                // usage error
  CHECK(run_cli("dist --gens 6,9,20 --n 50").code == 2);      // missing --weights
  CHECK(run_cli("spline --knots 1,1,1").code == 1);           // domain error

  auto err = run_cli("spline --knots 1,1,1", true);
  CHECK(err.out.find("error: all-knots-equal:") != std::string::npos);
  auto perr = run_cli("count --gens 6,9,x --n 1", true);
  CHECK(perr.out.find("error: parse-error:") != std::string::npos);
}
