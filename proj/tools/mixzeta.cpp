// mixzeta: coefficient tables, poly-Bernoulli numbers, star values, special values, verification suites.

#include "mixzeta/coefficients.hpp"
#include "mixzeta/harness.hpp"
#include "mixzeta/integrals.hpp"
#include "mixzeta/polybernoulli.hpp"
#include "mixzeta/theorems.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace mixzeta;

namespace {

constexpr int kUsageError = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split_commas(std::string text) {
  for (char& c : text)
    if (c == '(' || c == ')') c = ' ';
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    const auto b = part.find_first_not_of(" \t");
    const auto e = part.find_last_not_of(" \t");
    if (b == std::string::npos) throw UsageError("empty entry in list '" + text + "'");
    parts.push_back(part.substr(b, e - b + 1));
  }
  if (parts.empty()) throw UsageError("empty list");
  return parts;
}

std::string print_value(const NumericValue& v) {
  std::ostringstream out;
  out << std::setprecision(15) << v.value << " +/- " << std::setprecision(2) << v.abs_error;
  return out.str();
}

int cmd_coeffs(const std::string& family_name, int n, int k) {
  const Family family = parse_family(family_name);
  const auto table = coefficient_table(family, n, k);
  std::cout << to_string(family) << "^(" << n << ")";
  if (family == Family::Pprime || family == Family::Aprime) std::cout << " k=" << k;
  std::cout << '\n';
  for (int row = 0; row <= table->max_row(); ++row) {
    bool any = false;
    std::ostringstream line;
    for (const auto& [key, value] : table->entries) {
      if (key.first != row) continue;
      line << (any ? " " : "") << to_string(value);
      any = true;
    }
    if (any) std::cout << "row " << row << ": " << line.str() << '\n';
  }
  return 0;
}

int cmd_polybernoulli(const std::string& kind, const std::string& index_text, int m) {
  if (kind == "frakB2") {
    const auto parts = split_commas(index_text);
    if (parts.size() != 2) throw UsageError("frakB2 takes two lower indices \"k1,k2\"");
    std::cout << to_string(kt_frakB_r2(std::stoi(parts[0]), std::stoi(parts[1]), m)) << '\n';
    return 0;
  }
  const SignedIndex index = SignedIndex::parse(index_text);
  if (kind == "B") std::cout << to_string(poly_bernoulli_B(index, m)) << '\n';
  else if (kind == "C") std::cout << to_string(poly_bernoulli_C(index, m)) << '\n';
  else throw UsageError("unknown kind '" + kind + "' (expected B|C|frakB2)");
  return 0;
}

int cmd_zetastar(const std::string& exps_text, const std::string& shifts_text, double tol) {
  HurwitzStarArgs args;
  for (const auto& p : split_commas(exps_text)) args.exponents.push_back(std::stoi(p));
  if (shifts_text.empty()) {
    args.shifts.assign(args.exponents.size(), Rational(1));
  } else {
    for (const auto& a : split_commas(shifts_text)) args.shifts.push_back(parse_rational(a));
  }
  ZetaOptions options;
  options.tol = tol;
  std::cout << print_value(mhzsv_num(args, options)) << '\n';
  return 0;
}

int cmd_special(const std::string& fn, const std::string& index_text, double s, const std::string& method,
                double tol) {
  const auto request = SpecialFunctionRequest::from_index(fn, SignedIndex::parse(index_text), s);
  request.validate();
  std::cout << request.describe() << " = ";
  if (method == "quadrature") {
    QuadratureOptions options;
    options.tol = tol;
    std::cout << print_value(quad_eval(request, options)) << '\n';
    return 0;
  }
  if (method == "closedform") {
    const auto name = closed_form_for(request);
    if (!name) throw UsageError("no closed form registered for " + request.describe());
    std::cout << print_value(closed_form_eval(*name, s)) << '\n';
    return 0;
  }
  if (method != "theorem") throw UsageError("unknown method '" + method + "' (expected quadrature|theorem|closedform)");
  if (s < 1 || s != std::floor(s)) throw UsageError("the theorem route needs a positive integer s = m+1");
  const int m = static_cast<int>(s) - 1;
  switch (request.kind) {
    case SpecialKind::eta_pos_neg:
      std::cout << print_value(rhs_eta_pos_neg(request.k, request.n, m)) << '\n';
      break;
    case SpecialKind::eta_neg_pos:
      std::cout << print_value(rhs_eta_neg_pos(request.n, request.k, m)) << '\n';
      break;
    case SpecialKind::eta_ones_neg: {
      const Rational exact = rhs_eta_ones_neg(request.r, request.n, m);
      std::cout << to_string(exact) << " (" << std::setprecision(15) << to_double(exact) << ")\n";
      break;
    }
    case SpecialKind::xi_neg_pos:
      std::cout << print_value(rhs_xi_neg_pos(request.n, request.k, m)) << '\n';
      break;
    case SpecialKind::xitilde_pos_neg:
      std::cout << print_value(rhs_xitilde_pos_neg(request.k, request.n, m)) << '\n';
      break;
  }
  return 0;
}

int cmd_verify(RunConfig config) {
  config.validate();
  const auto records = run_suite(config.suite, config);
  const std::string path = resolve_report_path(config);
  emit_report(records, parse_report_format(config.format), path, config);
  std::size_t failed = 0;
  for (const auto& r : records)
    if (!r.pass) {
      ++failed;
      std::cout << "FAIL " << r.case_id << ": " << to_string(r.lhs) << " vs " << to_string(r.rhs) << '\n';
    }
  std::cout << config.suite << ": " << records.size() - failed << "/" << records.size() << " passed; report "
            << path << '\n';
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mixed-index Arakawa-Kaneko and Kaneko-Tsumura zeta values"};
  app.require_subcommand(1);

  std::string family, kind, index_text, exps, shifts, fn, method = "quadrature";
  int n = 0, k = 0, m = 0;
  double s = 1.0, tol = 1e-9;

  auto* coeffs = app.add_subcommand("coeffs", "Print an exact coefficient table");
  coeffs->add_option("--family", family, "P|A|D|Q|E|Pprime|Aprime")->required();
  coeffs->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  coeffs->add_option("--k", k, "second parameter for Pprime/Aprime")->check(CLI::NonNegativeNumber);

  auto* pb = app.add_subcommand("polybernoulli", "Exact multi-poly-Bernoulli numbers");
  pb->add_option("--kind", kind, "B|C|frakB2")->required();
  pb->add_option("--index", index_text, "\"k1,k2,...\"")->required();
  pb->add_option("--m", m)->required()->check(CLI::NonNegativeNumber);

  auto* zs = app.add_subcommand("zetastar", "Multiple Hurwitz zeta-star value");
  zs->add_option("--exps", exps, "\"p1,...\"")->required();
  zs->add_option("--shifts", shifts, "\"a1,...\" (default all 1)");
  zs->add_option("--tol", tol)->check(CLI::PositiveNumber);

  auto* sp = app.add_subcommand("special", "Evaluate eta, xi or xitilde");
  sp->add_option("--fn", fn, "eta|xi|xitilde")->required();
  sp->add_option("--index", index_text, "\"k1,k2,...\"")->required();
  sp->add_option("--s", s)->required();
  sp->add_option("--method", method, "quadrature|theorem|closedform");
  sp->add_option("--tol", tol)->check(CLI::PositiveNumber);

  RunConfig config;
  std::string config_path, suite, report, format;
  int jobs = 0;
  auto* verify = app.add_subcommand("verify", "Run a verification suite and write a report");
  verify->add_option("--suite", suite, "coefficients|polybernoulli|lemmas|theorems|paper-examples|duality|all");
  verify->add_option("--config", config_path, "key=value file; flags override it")->check(CLI::ExistingFile);
  verify->add_option("--report", report, "report path (default $MIXZETA_REPORT_DIR/report-SUITE.FORMAT)");
  verify->add_option("--format", format, "json|csv");
  verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*coeffs) return cmd_coeffs(family, n, k);
    if (*pb) return cmd_polybernoulli(kind, index_text, m);
    if (*zs) return cmd_zetastar(exps, shifts, tol);
    if (*sp) return cmd_special(fn, index_text, s, method, tol);
    if (!config_path.empty()) config = RunConfig::load(config_path);
    if (!suite.empty()) config.suite = suite;
    if (!report.empty()) config.report = report;
    if (!format.empty()) config.format = format;
    if (jobs > 0) config.jobs = jobs;
    return cmd_verify(config);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
