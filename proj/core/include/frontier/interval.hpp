#pragma once

#include <map>
#include <string>

namespace frontier {

/// Point estimate with a confidence interval. lower <= upper always holds;
/// the point need not lie inside the interval for median-unbiased
/// constructions.
struct IntervalEstimate {
  double point = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double level = 0.95;
  std::string method;
  std::map<std::string, double> diagnostics;

  double length() const noexcept { return upper - lower; }
  bool covers(double value) const noexcept { return lower <= value && value <= upper; }
};

}  // namespace frontier
