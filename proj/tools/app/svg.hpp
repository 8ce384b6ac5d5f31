#pragma once

#include <string>
#include <vector>

#include "frontier/sample.hpp"
#include "report.hpp"

namespace frontier::app {

/// Static SVG: scatter of (x, y) with each method's point estimates drawn as
/// a line and its confidence band shaded. Single-input data only; SKIPPED
/// rows are left out.
std::string render_frontier_svg(const Sample& sample, const std::vector<ReportRow>& rows,
                                const std::string& title);

}  // namespace frontier::app
