#pragma once

// Verification suites comparing independent computation routes.

#include "mixzeta/numeric.hpp"
#include "mixzeta/rational.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace mixzeta {

using CaseValue = std::variant<Rational, NumericValue>;

std::string to_string(const CaseValue& value);

struct CaseRecord {
  std::string case_id;
  std::string description;
  std::string lhs_route;
  std::string rhs_route;
  CaseValue lhs;
  CaseValue rhs;
  double tolerance = 0.0;
  bool pass = false;
  long runtime_ms = 0;
};

/// Exact pairs must be equal; otherwise |lhs - rhs| <= tolerance + both abs_errors.
bool values_agree(const CaseValue& lhs, const CaseValue& rhs, double tolerance);

struct RunConfig {
  double tolerance = 1e-6;
  double quad_tol = 1e-9;
  int quad_max_evaluations = 2000;
  double zeta_tol = 1e-9;
  long nested_cutoff = 100000;
  std::string suite = "all";
  int jobs = 1;
  std::string report;
  std::string format = "json";

  /// Set one key (the names of the fields above). Throws std::invalid_argument.
  void set(const std::string& key, const std::string& value);
  /// Reject inconsistent settings.
  void validate() const;
  /// Flat key=value lines, '#' comments allowed.
  static RunConfig load(const std::string& path);
  std::vector<std::pair<std::string, std::string>> key_values() const;
};

/// Environment variable naming the directory for reports without an explicit path.
inline constexpr const char* kReportDirEnv = "MIXZETA_REPORT_DIR";

/// Where a run writes its report.
std::string resolve_report_path(const RunConfig& config);

std::vector<std::string> suite_names();

/// Run every case of a suite. Records are ordered by case_id whatever config.jobs is.
std::vector<CaseRecord> run_suite(const std::string& name, const RunConfig& config);

enum class ReportFormat { json, csv };
ReportFormat parse_report_format(const std::string& name);

std::string format_report(const std::vector<CaseRecord>& records, ReportFormat format);
/// Writes the report and, next to it, `<path>.config` with the effective configuration.
void emit_report(const std::vector<CaseRecord>& records, ReportFormat format, const std::string& path,
                 const RunConfig& config);
std::vector<CaseRecord> parse_json_report(const std::string& text);

}  // namespace mixzeta
