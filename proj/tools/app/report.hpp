#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "frontier/simlab.hpp"

namespace frontier::app {

/// One row of an estimation report: a (query point, method) pair.
struct ReportRow {
  std::vector<double> x;
  double n_eff = 0.0;
  double p_hat = 0.0;
  double xi_hat = 0.0;
  double point = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double level = 0.95;
  std::string method;
  /// "OK" or "SKIPPED".
  std::string status = "OK";
  std::string reason;
  /// Engine diagnostics; written to the JSON sidecar only.
  std::map<std::string, double> diagnostics;

  /// Equality on the CSV columns.
  bool same_columns(const ReportRow& other) const;
};

/// Shortest text that parses back to exactly the same double; "nan" for NaN.
std::string format_double(double value);
double parse_report_double(const std::string& field);

inline constexpr const char* kReportHeader = "x,n_eff,p_hat,xi_hat,point,lower,upper,level,method,status,reason";

/// CSV report preceded by a "# manifest: <file>" comment line.
void write_report_csv(std::ostream& out, const std::vector<ReportRow>& rows, const std::string& manifest);
/// Parses what write_report_csv wrote; comment lines are skipped.
std::vector<ReportRow> read_report_csv(std::istream& in);

nlohmann::json report_json(const std::vector<ReportRow>& rows, const std::string& manifest);

/// Study summaries without the runtime column, so the files are reproducible.
void write_study_csv(std::ostream& out, const StudyReport& report, const std::string& manifest);
nlohmann::json study_json(const StudyReport& report, const std::string& manifest);

}  // namespace frontier::app
