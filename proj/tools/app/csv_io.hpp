#pragma once

#include <istream>
#include <string>
#include <vector>

#include "frontier/sample.hpp"

namespace frontier::app {

struct InputTable {
  std::vector<std::string> header;
  Sample sample;
  /// Number of output columns collapsed into the scalar output.
  std::size_t outputs = 1;
};

/// Reads comma-separated data with a header row: input columns first, then
/// `outputs` output columns, reduced to their maximum. Blank lines are
/// skipped. Throws MalformedInput with the offending line number.
InputTable parse_input_csv(std::istream& in, const std::string& name, std::size_t outputs = 1,
                           bool log_outputs = false);
InputTable read_input_csv(const std::string& path, std::size_t outputs = 1, bool log_outputs = false);

/// Splits on a delimiter and trims surrounding whitespace.
std::vector<std::string> split_fields(const std::string& line, char delimiter = ',');

/// Strict number parsing: the whole field must be a finite double.
bool parse_double(const std::string& field, double& out);

}  // namespace frontier::app
