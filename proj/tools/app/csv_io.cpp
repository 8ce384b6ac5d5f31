#include "csv_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "frontier/error.hpp"

namespace frontier::app {

std::vector<std::string> split_fields(const std::string& line, char delimiter) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = line.find(delimiter, start);
    std::string field = line.substr(start, end == std::string::npos ? std::string::npos : end - start);
    const auto first = field.find_first_not_of(" \t\r");
    const auto last = field.find_last_not_of(" \t\r");
    fields.push_back(first == std::string::npos ? std::string() : field.substr(first, last - first + 1));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return fields;
}

bool parse_double(const std::string& field, double& out) {
  if (field.empty()) return false;
  const char* begin = field.data();
  const char* end = begin + field.size();
  if (*begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end && std::isfinite(out);
}

InputTable parse_input_csv(std::istream& in, const std::string& name, std::size_t outputs, bool log_outputs) {
  if (outputs < 1) fail(ErrorKind::InvalidArgument, "at least one output column is required");
  auto bad = [&](std::size_t line, const std::string& what) {
    fail(ErrorKind::MalformedInput, name + ":" + std::to_string(line) + ": " + what);
  };

  InputTable table;
  table.outputs = outputs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    table.header = split_fields(line);
    break;
  }
  if (table.header.empty()) bad(line_no, "missing header row");
  if (table.header.size() < outputs + 1)
    bad(line_no, "header needs at least one input column and " + std::to_string(outputs) + " output column(s)");
  for (const auto& h : table.header) {
    double ignored;
    if (h.empty()) bad(line_no, "empty column name in header");
    if (parse_double(h, ignored)) bad(line_no, "header row is required (found numeric field '" + h + "')");
  }

  const std::size_t columns = table.header.size();
  const std::size_t p = columns - outputs;
  std::vector<MultiObservation> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto fields = split_fields(line);
    if (fields.size() != columns)
      bad(line_no, "expected " + std::to_string(columns) + " fields, found " + std::to_string(fields.size()));
    MultiObservation obs;
    for (std::size_t c = 0; c < columns; ++c) {
      double v;
      if (!parse_double(fields[c], v))
        bad(line_no, "column '" + table.header[c] + "' is not a finite number ('" + fields[c] + "')");
      (c < p ? obs.x : obs.y).push_back(v);
    }
    if (log_outputs) {
      for (double& v : obs.y) {
        if (!(v > 0.0)) bad(line_no, "--log-y needs positive outputs");
        v = std::log(v);
      }
    }
    rows.push_back(std::move(obs));
  }
  if (rows.empty()) bad(line_no, "no data rows");
  table.sample = reduce_outputs(rows);
  return table;
}

InputTable read_input_csv(const std::string& path, std::size_t outputs, bool log_outputs) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot open input file '" + path + "'");
  return parse_input_csv(in, path, outputs, log_outputs);
}

}  // namespace frontier::app
