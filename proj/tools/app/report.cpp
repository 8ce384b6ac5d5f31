#include "report.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "csv_io.hpp"
#include "frontier/error.hpp"

namespace frontier::app {

namespace {

std::string join_point(const std::vector<double>& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ';';
    out += format_double(x[i]);
  }
  return out;
}

// Reasons are free text; keep them CSV-safe without quoting.
std::string sanitize(std::string text) {
  for (char& c : text)
    if (c == ',' || c == '\n' || c == '\r' || c == '"') c = c == ',' ? ';' : ' ';
  return text;
}

nlohmann::json number_or_null(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

}  // namespace

bool ReportRow::same_columns(const ReportRow& o) const {
  auto eq = [](double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; };
  if (x.size() != o.x.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!eq(x[i], o.x[i])) return false;
  return eq(n_eff, o.n_eff) && eq(p_hat, o.p_hat) && eq(xi_hat, o.xi_hat) && eq(point, o.point) &&
         eq(lower, o.lower) && eq(upper, o.upper) && eq(level, o.level) && method == o.method &&
         status == o.status && reason == o.reason;
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  if (ec != std::errc()) fail(ErrorKind::InvalidArgument, "cannot format number");
  return std::string(buffer, ptr);
}

double parse_report_double(const std::string& field) {
  if (field == "nan") return std::numeric_limits<double>::quiet_NaN();
  double v;
  if (!parse_double(field, v)) fail(ErrorKind::MalformedInput, "bad number '" + field + "' in report");
  return v;
}

void write_report_csv(std::ostream& out, const std::vector<ReportRow>& rows, const std::string& manifest) {
  out << "# manifest: " << manifest << '\n' << kReportHeader << '\n';
  for (const auto& r : rows) {
    out << join_point(r.x) << ',' << format_double(r.n_eff) << ',' << format_double(r.p_hat) << ','
        << format_double(r.xi_hat) << ',' << format_double(r.point) << ',' << format_double(r.lower) << ','
        << format_double(r.upper) << ',' << format_double(r.level) << ',' << r.method << ',' << r.status << ','
        << sanitize(r.reason) << '\n';
  }
}

std::vector<ReportRow> read_report_csv(std::istream& in) {
  std::vector<ReportRow> rows;
  std::string line;
  bool header_seen = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != kReportHeader) fail(ErrorKind::MalformedInput, "report line " + std::to_string(line_no) + ": unexpected header");
      header_seen = true;
      continue;
    }
    const auto f = split_fields(line);
    if (f.size() != 11) fail(ErrorKind::MalformedInput, "report line " + std::to_string(line_no) + ": expected 11 fields");
    ReportRow r;
    for (const auto& part : split_fields(f[0], ';')) r.x.push_back(parse_report_double(part));
    r.n_eff = parse_report_double(f[1]);
    r.p_hat = parse_report_double(f[2]);
    r.xi_hat = parse_report_double(f[3]);
    r.point = parse_report_double(f[4]);
    r.lower = parse_report_double(f[5]);
    r.upper = parse_report_double(f[6]);
    r.level = parse_report_double(f[7]);
    r.method = f[8];
    r.status = f[9];
    r.reason = f[10];
    rows.push_back(std::move(r));
  }
  if (!header_seen) fail(ErrorKind::MalformedInput, "report has no header");
  return rows;
}

nlohmann::json report_json(const std::vector<ReportRow>& rows, const std::string& manifest) {
  nlohmann::json out;
  out["manifest"] = manifest;
  out["rows"] = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j;
    j["x"] = r.x;
    j["n_eff"] = number_or_null(r.n_eff);
    j["p_hat"] = number_or_null(r.p_hat);
    j["xi_hat"] = number_or_null(r.xi_hat);
    j["point"] = number_or_null(r.point);
    j["lower"] = number_or_null(r.lower);
    j["upper"] = number_or_null(r.upper);
    j["level"] = r.level;
    j["method"] = r.method;
    j["status"] = r.status;
    j["reason"] = r.reason;
    nlohmann::json d = nlohmann::json::object();
    for (const auto& [k, v] : r.diagnostics) d[k] = number_or_null(v);
    j["diagnostics"] = d;
    out["rows"].push_back(j);
  }
  return out;
}

namespace {

constexpr const char* kStudyHeader =
    "method,x,truth,replications,failures,coverage,avg_length,bias,mad,rmse,share_above,mean_bias,mean_mad,"
    "mean_rmse,avg_acceptance";

}  // namespace

void write_study_csv(std::ostream& out, const StudyReport& report, const std::string& manifest) {
  out << "# manifest: " << manifest << '\n' << kStudyHeader << '\n';
  for (const auto& r : report.rows) {
    out << r.method << ',' << format_double(r.x) << ',' << format_double(r.truth) << ',' << r.replications << ','
        << r.failures << ',' << format_double(r.coverage) << ',' << format_double(r.avg_length) << ','
        << format_double(r.bias) << ',' << format_double(r.mad) << ',' << format_double(r.rmse) << ','
        << format_double(r.share_above) << ',' << format_double(r.mean_bias) << ',' << format_double(r.mean_mad)
        << ',' << format_double(r.mean_rmse) << ',' << format_double(r.avg_acceptance) << '\n';
  }
}

nlohmann::json study_json(const StudyReport& report, const std::string& manifest) {
  nlohmann::json out;
  out["manifest"] = manifest;
  out["rows"] = nlohmann::json::array();
  for (const auto& r : report.rows) {
    out["rows"].push_back({{"method", r.method},
                           {"x", r.x},
                           {"truth", r.truth},
                           {"replications", r.replications},
                           {"failures", r.failures},
                           {"coverage", number_or_null(r.coverage)},
                           {"avg_length", number_or_null(r.avg_length)},
                           {"bias", number_or_null(r.bias)},
                           {"mad", number_or_null(r.mad)},
                           {"rmse", number_or_null(r.rmse)},
                           {"share_above", number_or_null(r.share_above)},
                           {"mean_bias", number_or_null(r.mean_bias)},
                           {"mean_mad", number_or_null(r.mean_mad)},
                           {"mean_rmse", number_or_null(r.mean_rmse)},
                           {"avg_acceptance", number_or_null(r.avg_acceptance)}});
  }
  return out;
}

}  // namespace frontier::app
