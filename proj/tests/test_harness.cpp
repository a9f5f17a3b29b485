#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mixzeta/harness.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace mixzeta;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / ("mixzeta_harness_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CaseRecord sample(const std::string& id, CaseValue lhs, CaseValue rhs, double tol) {
  CaseRecord r;
  r.case_id = id;
  r.description = "sample, with comma";
  r.lhs_route = "a";
  r.rhs_route = "b";
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.tolerance = tol;
  r.pass = values_agree(r.lhs, r.rhs, tol);
  r.runtime_ms = 3;
  return r;
}

void strip_runtime(std::vector<CaseRecord>& records) {
  for (auto& r : records) r.runtime_ms = 0;
}

bool same_reports(std::vector<CaseRecord> a, std::vector<CaseRecord> b) {
  strip_runtime(a);
  strip_runtime(b);
  return format_report(a, ReportFormat::json) == format_report(b, ReportFormat::json);
}

}  // namespace

TEST_CASE("agreement rule") {
  CHECK(values_agree(make_rational(1, 3), make_rational(2, 6), 0));
  CHECK_FALSE(values_agree(make_rational(1, 3), make_rational(1, 3) + make_rational(1, 1000000000), 1e-3));
  CHECK(values_agree(NumericValue{1.0, 3e-7}, NumericValue{1.0 + 1.5e-6, 3e-7}, 1e-6));
  CHECK_FALSE(values_agree(NumericValue{1.0, 3e-7}, NumericValue{1.0 + 1.5e-6, 0}, 1e-6));
  CHECK(values_agree(make_rational(7, 8), NumericValue{0.875 + 1e-9, 0}, 1e-8));
  CHECK(to_string(CaseValue{make_rational(-3, 4)}) == "-3/4");
}

TEST_CASE("configuration") {
  RunConfig c;
  c.set("tolerance", "1e-7");
  c.set("jobs", "3");
  c.set("suite", "duality");
  CHECK(c.tolerance == 1e-7);
  CHECK(c.jobs == 3);
  CHECK_NOTHROW(c.validate());
  CHECK_THROWS_AS(c.set("colour", "red"), std::invalid_argument);
  CHECK_THROWS_AS(c.set("jobs", "three"), std::invalid_argument);
  CHECK_THROWS_AS(c.set("tolerance", "1e-7x"), std::invalid_argument);
  RunConfig bad;
  bad.jobs = 0;
  CHECK_THROWS(bad.validate());
  bad = RunConfig{};
  bad.format = "xml";
  CHECK_THROWS(bad.validate());
  bad = RunConfig{};
  bad.suite = "nonsense";
  CHECK_THROWS(bad.validate());

  const auto dir = scratch_dir();
  const auto path = dir / "run.cfg";
  std::ofstream(path) << "# comment\n tolerance = 2e-6 \nsuite=lemmas # trailing\n\njobs=2\n";
  const auto loaded = RunConfig::load(path.string());
  CHECK(loaded.tolerance == 2e-6);
  CHECK(loaded.suite == "lemmas");
  CHECK(loaded.jobs == 2);
  std::ofstream(dir / "broken.cfg") << "tolerance\n";
  CHECK_THROWS(RunConfig::load((dir / "broken.cfg").string()));
  CHECK_THROWS(RunConfig::load((dir / "missing.cfg").string()));
}

TEST_CASE("report directory from the environment") {
  RunConfig c;
  c.suite = "duality";
  c.format = "csv";
  ::setenv(kReportDirEnv, "/some/dir", 1);
  CHECK(resolve_report_path(c) == "/some/dir/report-duality.csv");
  ::unsetenv(kReportDirEnv);
  CHECK(resolve_report_path(c) == "./report-duality.csv");
  c.report = "explicit.csv";
  CHECK(resolve_report_path(c) == "explicit.csv");
}

TEST_CASE("suites") {
  RunConfig c;
  CHECK_THROWS_AS(run_suite("bogus", c), std::invalid_argument);
  const auto duality = run_suite("duality", c);
  CHECK(duality.size() == 121 + 125);
  for (const auto& r : duality) {
    CHECK(r.pass);
    CHECK(std::holds_alternative<Rational>(r.lhs));
    CHECK(std::holds_alternative<Rational>(r.rhs));
  }
  const auto paper = run_suite("paper-examples", c);
  CHECK(paper.size() >= 20);
  for (const auto& r : paper) {
    INFO(r.case_id);
    CHECK(r.pass);
  }
  CHECK(std::is_sorted(paper.begin(), paper.end(),
                       [](const CaseRecord& a, const CaseRecord& b) { return a.case_id < b.case_id; }));
  const auto coefficients = run_suite("coefficients", c);
  int a = 0, e = 0, d = 0;
  for (const auto& r : coefficients) {
    a += r.case_id.rfind("coefficients/A/", 0) == 0;
    e += r.case_id.rfind("coefficients/E/", 0) == 0;
    d += r.case_id.rfind("coefficients/D/rowsum", 0) == 0;
  }
  CHECK(a > 0);
  CHECK(e > 0);
  CHECK(d == 13);
}

TEST_CASE("a failing tolerance is reported, not hidden") {
  RunConfig c;
  c.tolerance = 0;
  c.quad_tol = 1e-3;
  c.quad_max_evaluations = 60;
  const auto records = run_suite("theorems", c);
  bool any_numeric = false;
  for (const auto& r : records) any_numeric = any_numeric || std::holds_alternative<NumericValue>(r.lhs);
  CHECK(any_numeric);
  for (const auto& r : records) CHECK(r.pass == values_agree(r.lhs, r.rhs, r.tolerance));
}

TEST_CASE("determinism and parallel equivalence") {
  RunConfig serial;
  RunConfig parallel;
  parallel.jobs = 8;
  for (const std::string suite : {"theorems", "lemmas", "polybernoulli"}) {
    const auto a = run_suite(suite, serial);
    const auto b = run_suite(suite, serial);
    const auto c = run_suite(suite, parallel);
    CHECK(same_reports(a, b));
    CHECK(same_reports(a, c));
  }
}

TEST_CASE("report formats") {
  CHECK(format_report({}, ReportFormat::json) == "[]\n");
  CHECK(format_report({}, ReportFormat::csv) ==
        "case_id,description,lhs_route,rhs_route,lhs,rhs,tolerance,pass,runtime_ms\n");
  const auto one = nlohmann::json::parse(format_report({sample("x", Rational(1), Rational(1), 0)}, ReportFormat::json));
  CHECK(one.is_array());
  CHECK(one.size() == 1);
  CHECK(one[0].contains("case_id"));
  CHECK(one[0].size() == 9);

  const std::vector<CaseRecord> mixed{
      sample("exact", make_rational(-7, 3), make_rational(-7, 3), 0),
      sample("numeric", NumericValue{0.1, 2.5e-12}, NumericValue{0.1 + 1e-9, 0}, 1e-6),
      sample("mixed", make_rational(1, 10), NumericValue{0.30000000000000004, 1e-16}, 1e-6)};
  const std::string text = format_report(mixed, ReportFormat::json);
  CHECK(text.find("\"-7/3\"") != std::string::npos);
  CHECK(text.find("\"value\": 0.1\n") != std::string::npos);
  CHECK(text.find("0.30000000000000004") != std::string::npos);
  const auto back = parse_json_report(text);
  CHECK(format_report(back, ReportFormat::json) == text);
  CHECK(std::get<Rational>(back[0].lhs) == make_rational(-7, 3));
  CHECK(std::get<NumericValue>(back[1].lhs).abs_error == 2.5e-12);
  CHECK_FALSE(back[2].pass);

  const std::string csv = format_report(mixed, ReportFormat::csv);
  CHECK(csv.find("\"sample, with comma\"") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  CHECK_THROWS(parse_json_report("{}"));
  CHECK_THROWS(parse_report_format("yaml"));
}

TEST_CASE("emitted reports and their configuration") {
  const auto dir = scratch_dir();
  RunConfig c;
  c.suite = "duality";
  c.tolerance = 3e-7;
  const auto records = run_suite(c.suite, c);
  const auto path = dir / "nested" / "duality.json";
  emit_report(records, ReportFormat::json, path.string(), c);
  CHECK(parse_json_report(slurp(path)).size() == records.size());
  const auto reloaded = RunConfig::load(path.string() + ".config");
  CHECK(reloaded.key_values() == c.key_values());
  CHECK(same_reports(run_suite(reloaded.suite, reloaded), records));
  CHECK_THROWS(emit_report(records, ReportFormat::csv, "/proc/definitely/not/writable.csv", c));
}
