#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <omp.h>

#include "histo/convergence.hpp"
#include "histo/errors.hpp"
#include "histo/expression.hpp"
#include "histo/format.hpp"

using namespace histo;
namespace fs = std::filesystem;

namespace {

std::shared_ptr<const Mesh> fk(int n) { return std::make_shared<const Mesh>(friedrichs_keller(n)); }

double l1(const TestFunction& f, int n, const std::shared_ptr<const Scheme>& s, int sub = 4) {
  return lp_error(f.eval, reconstruct_global(f.eval, fk(n), s), Norm::l1, sub);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("test functions") {
  const double pi = std::numbers::pi;
  CHECK(test_function("f1")({0, 0}) == 0.0);
  CHECK(test_function("f1")({1, 0}) == 1.0);
  CHECK(test_function("f2")({0.3, -0.1}) == doctest::Approx(std::exp(-4 * 0.1) * std::sin(pi * 0.2)));
  CHECK(test_function("f3")({0.25, 0.25}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(test_function("f4")({0.125, 0.0}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(test_function("f5")({0, 0}) == 1.0);
  // Franke's function at the image of (0,0): its first and third terms.
  const double x = 4.5, y = 4.5;
  const double franke = 0.75 * std::exp(-(x - 2) * (x - 2) / 4 - (y - 2) * (y - 2) / 4) +
                        0.75 * std::exp(-(x + 1) * (x + 1) / 49 - (y + 1) / 10) +
                        0.5 * std::exp(-(x - 7) * (x - 7) / 4 - (y - 3) * (y - 3) / 4) -
                        0.2 * std::exp(-(x - 4) * (x - 4) - (y - 7) * (y - 7));
  CHECK(test_function("f6")({0, 0}) == doctest::Approx(franke).epsilon(1e-15));
  CHECK(builtin_function_ids().size() == 6);
  CHECK_THROWS_AS(test_function("f7"), ConfigError);
}

TEST_CASE("expressions") {
  const Expression e = Expression::parse("2*x^2 - sin(pi*y)/3 + exp(-x) + 2^3^2");
  const double v = e(1.5, 0.25);
  CHECK(v == doctest::Approx(2 * 2.25 - std::sin(std::numbers::pi * 0.25) / 3 + std::exp(-1.5) + 512.0));
  CHECK(Expression::parse("-x^2")(3, 0) == -9.0);
  CHECK(Expression::parse("sqrt(abs(y)) + tanh(0) + atan(1)*4 + log(e)")(0, 4) ==
        doctest::Approx(2 + std::numbers::pi + 1));
  CHECK(custom_function("g", "x*y")({2, 3}) == 6.0);
  CHECK_THROWS_AS(Expression::parse("x +"), ParseError);
  CHECK_THROWS_AS(Expression::parse("foo(x)"), ParseError);
  CHECK_THROWS_AS(Expression::parse("(x"), ParseError);
  CHECK_THROWS_AS(Expression::parse("z"), ParseError);
}

TEST_CASE("format helpers") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(parse_double(format_double(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK(parse_int(" 42 ") == 42);
  CHECK_THROWS_AS(parse_int("4x"), ConfigError);
  CHECK_THROWS_AS(parse_double(""), ConfigError);
  CHECK(split_list(" a, b ,,c ") == std::vector<std::string>{"a", "b", "c"});
  CHECK(parse_norm("l2") == Norm::l2);
  CHECK(to_string(Norm::linf) == "linf");
  CHECK_THROWS_AS(parse_norm("l3"), ConfigError);
}

TEST_CASE("lp error") {
  const auto mesh = fk(5);
  const auto s2 = Scheme::enriched(Density::jacobi(1.0, 0.5), 2);
  const auto q = custom_function("q", "3 - x + 2*x*y - y^2");
  for (Norm n : {Norm::l1, Norm::l2, Norm::linf})
    CHECK(lp_error(q.eval, reconstruct_global(q.eval, mesh, s2), n) <= 1e-8);
  const auto lin = custom_function("l", "1 + 2*x - y");
  CHECK(lp_error(lin.eval, reconstruct_global(lin.eval, mesh, Scheme::classical()), Norm::l1) <= 1e-8);

  // Zero reconstruction against f = 1 on [-1,1]^2.
  const Reconstruction zero = reconstruct_global([](const Point2&) { return 0.0; }, mesh, s2);
  const auto one = [](const Point2&) { return 1.0; };
  CHECK(lp_error(one, zero, Norm::l1) == doctest::Approx(4.0).epsilon(1e-13));
  CHECK(lp_error(one, zero, Norm::l2) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(lp_error(one, zero, Norm::linf) == 1.0);

  // Parallel and serial reductions agree bit for bit, for any thread count.
  const auto f = test_function("f6");
  const Reconstruction r = reconstruct_global(f.eval, fk(17), s2);
  for (Norm n : {Norm::l1, Norm::l2, Norm::linf}) {
    const double ref = reference::lp_error(f.eval, r, n);
    CHECK(lp_error(f.eval, r, n) == ref);
    const int saved = omp_get_max_threads();
    omp_set_num_threads(3);
    CHECK(lp_error(f.eval, r, n) == ref);
    omp_set_num_threads(saved);
  }
  CHECK_THROWS(lp_error(f.eval, r, Norm::l1, 0));
}

TEST_CASE("convergence behavior") {
  const auto uni = Scheme::enriched(Density::uniform(), 2);
  const auto f3 = test_function("f3");
  const double r = l1(f3, 9, uni) / l1(f3, 19, uni);
  CHECK(r >= 6.0);
  CHECK(r <= 10.0);

  // Monotone in n for the smooth functions, one small uptick allowed for f1.
  for (const auto& id : builtin_function_ids()) {
    const auto f = test_function(id);
    int upticks = 0;
    double prev = INFINITY;
    for (int n : {4, 9, 14, 19}) {
      const double e = l1(f, n, uni);
      if (e > prev) {
        ++upticks;
        CHECK(id == "f1");
        CHECK(e <= 1.05 * prev);
      }
      prev = e;
    }
    CHECK(upticks <= 1);
  }
  // Doubling the error subdivision changes the L1 error by under 1%.
  const auto f2 = test_function("f2");
  const double e4 = l1(f2, 9, uni, 4), e8 = l1(f2, 9, uni, 8);
  CHECK(std::abs(e8 - e4) / e8 < 0.01);
}

TEST_CASE("scheme specs") {
  CHECK(SchemeSpec::parse("ch").kind == SchemeSpec::Kind::classical);
  CHECK(SchemeSpec::parse(" tuned ").kind == SchemeSpec::Kind::tuned);
  const auto j = SchemeSpec::parse("jacobi(1, 2.5)");
  CHECK(j.kind == SchemeSpec::Kind::jacobi);
  CHECK(j.alpha == 1.0);
  CHECK(j.beta == 2.5);
  const auto g = SchemeSpec::parse("gegenbauer(0.5)");
  CHECK(g.alpha == 0.5);
  CHECK(g.beta == 0.5);
  CHECK(SchemeSpec::parse("uniform").kind == SchemeSpec::Kind::gegenbauer);
  CHECK_THROWS_AS(SchemeSpec::parse("jacobi(1)"), ConfigError);
  CHECK_THROWS_AS(SchemeSpec::parse("jacobi(-1,0)"), ConfigError);
  CHECK_THROWS_AS(SchemeSpec::parse("spline"), ConfigError);
}

TEST_CASE("run config parsing") {
  std::istringstream in(R"(# study
functions = f1, g
define g = x*y + 1
levels = 2, 3
schemes = ch, jacobi(1,2), gegenbauer(0.5), tuned
norms = l1, linf
edge_points = 12
error_subdivision = 2
tune_levels = 1
tune_norm = l2
output_dir = out
timing = off
seed = 7
)");
  const RunConfig c = RunConfig::parse(in, "/tmp/base");
  REQUIRE(c.functions.size() == 2);
  CHECK(c.functions[1].id == "g");
  CHECK(c.functions[1]({2, 3}) == 7.0);
  CHECK(c.levels == std::vector<int>{2, 3});
  REQUIRE(c.schemes.size() == 4);
  CHECK(c.schemes[1].beta == 2.0);
  CHECK(c.norms == std::vector<Norm>{Norm::l1, Norm::linf});
  CHECK(c.edge_points == 12);
  CHECK(c.error_subdivision == 2);
  CHECK(c.tune_levels == std::vector<int>{1});
  CHECK(c.tune_norm == Norm::l2);
  CHECK(c.output_dir == "/tmp/base/out");
  CHECK(c.seed == 7);
  CHECK_FALSE(c.timing);

  auto parse_error_line = [](const std::string& text) -> std::size_t {
    std::istringstream s(text);
    try {
      RunConfig::parse(s);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(parse_error_line("functions = f1\nlevels = 2\nschemes = ch\ncolour = red\n") == 4);
  CHECK(parse_error_line("functions = f1\nlevels = two\n") == 2);
  CHECK(parse_error_line("just text\n") == 1);
  CHECK(parse_error_line("schemes = spline\n") == 1);
  std::istringstream missing("functions = f1\nschemes = ch\n");
  CHECK_THROWS_AS(RunConfig::parse(missing), ConfigError);
  std::istringstream unknown_fn("functions = f9\nlevels = 1\nschemes = ch\n");
  CHECK_THROWS_AS(RunConfig::parse(unknown_fn), ConfigError);
  CHECK_THROWS_AS(RunConfig::from_file("/nonexistent/run.cfg"), IoError);
}

TEST_CASE("run convergence bookkeeping") {
  RunConfig c;
  c.functions = {test_function("f2"), test_function("f5")};
  c.levels = {20, 30, 40, 50};
  c.schemes = {SchemeSpec::parse("ch"), SchemeSpec::parse("tuned")};
  c.tune_levels = {4, 9};
  const ErrorReport r = run_convergence(c);
  CHECK(r.rows.size() == 2 * 4 * 2);
  CHECK(r.tuning.size() == 2);
  for (std::size_t i = 0; i < r.rows.size(); i += 2) {
    const auto& ch = r.rows[i];
    const auto& tuned = r.rows[i + 1];
    CHECK(ch.scheme == "CH");
    CHECK(tuned.scheme == "tuned");
    CHECK(ch.triangles == static_cast<std::size_t>(2 * (ch.n + 1) * (ch.n + 1)));
    CHECK(ch.dofs == 3 * ch.triangles);
    CHECK(tuned.dofs == 6 * tuned.triangles);
    CHECK(tuned.alpha == r.tuning.at(tuned.function).best.alpha);
    CHECK(ch.error >= 0.0);
    CHECK(tuned.error < ch.error);
  }
}

TEST_CASE("outputs") {
  const fs::path dir = fs::temp_directory_path() / "histo_test_bench_outputs";
  fs::remove_all(dir);
  fs::create_directories(dir);
  {
    std::ofstream grid(dir / "grid.csv");
    grid << "alpha,beta\n0,0\n1,2\n";
    std::ofstream cfg(dir / "run.cfg");
    cfg << "functions = f3, h\ndefine h = exp(x)*y\nlevels = 2, 4\nschemes = ch, tuned, gegenbauer(1)\n"
           "norms = l1, l2\ntune_grid = grid.csv\ntune_levels = 1, 2\noutput_dir = out\n";
  }
  const RunConfig c = RunConfig::from_file((dir / "run.cfg").string());
  CHECK(c.tune_grid.pairs.size() == 2);
  write_outputs(run_convergence(c), c);
  const fs::path out = dir / "out";
  const std::string csv = slurp(out / "results.csv");
  CHECK(csv.rfind("function,n,triangles,scheme,alpha,beta,norm,error,seconds\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 2 * 2 * 3 * 2);
  CHECK(csv.find("f3,2,18,CH,,,l1,") != std::string::npos);
  CHECK(csv.find("h,4,50,gegenbauer,1,1,l2,") != std::string::npos);
  for (const char* f : {"f3.svg", "h.svg"}) {
    const std::string svg = slurp(out / f);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    std::size_t polylines = 0;
    for (auto pos = svg.find("<polyline"); pos != std::string::npos; pos = svg.find("<polyline", pos + 1)) ++polylines;
    CHECK(polylines == 3);
  }
  const std::string report = slurp(out / "report.txt");
  CHECK(report.find("tuned f3: alpha* = ") != std::string::npos);
  CHECK(report.find("rate=") != std::string::npos);

  // Re-running the same config gives a byte-identical CSV, also on one thread.
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  std::ostringstream again;
  write_results_csv(run_convergence(c), again, false);
  omp_set_num_threads(saved);
  CHECK(again.str() == csv);

  RunConfig bad = c;
  bad.output_dir = "/proc/histo-cannot-write";
  CHECK_THROWS_AS(write_outputs(ErrorReport{}, bad), IoError);
  fs::remove_all(dir);
}
