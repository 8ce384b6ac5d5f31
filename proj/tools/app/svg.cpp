#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "frontier/error.hpp"

namespace frontier::app {
namespace {

constexpr double kWidth = 720, kHeight = 480;
constexpr double kLeft = 60, kRight = 20, kTop = 40, kBottom = 50;
constexpr std::size_t kMaxPoints = 20000;
const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

// Round step of 1, 2 or 5 times a power of ten giving about five ticks.
double tick_step(double span) {
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0})
    if (raw <= m * mag) return m * mag;
  return 10.0 * mag;
}

}  // namespace

std::string render_frontier_svg(const Sample& sample, const std::vector<ReportRow>& rows, const std::string& title) {
  if (sample.dim() != 1) fail(ErrorKind::InvalidArgument, "plot supports single-input data only");

  double x_lo = INFINITY, x_hi = -INFINITY, y_lo = INFINITY, y_hi = -INFINITY;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    x_lo = std::min(x_lo, sample.x(i)[0]);
    x_hi = std::max(x_hi, sample.x(i)[0]);
    y_lo = std::min(y_lo, sample.y(i));
    y_hi = std::max(y_hi, sample.y(i));
  }
  std::map<std::string, std::vector<const ReportRow*>> by_method;
  for (const auto& r : rows) {
    if (r.status != "OK" || r.x.size() != 1) continue;
    by_method[r.method].push_back(&r);
    x_lo = std::min(x_lo, r.x[0]);
    x_hi = std::max(x_hi, r.x[0]);
    y_lo = std::min(y_lo, r.lower);
    y_hi = std::max(y_hi, r.upper);
  }
  if (x_hi == x_lo) x_hi = x_lo + 1.0;
  if (y_hi == y_lo) y_hi = y_lo + 1.0;
  const double pad = 0.05 * (y_hi - y_lo);
  y_lo -= pad;
  y_hi += pad;

  const double plot_w = kWidth - kLeft - kRight, plot_h = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  auto sy = [&](double y) { return kTop + (1.0 - (y - y_lo) / (y_hi - y_lo)) * plot_h; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" << escape(title)
      << "</text>\n";

  // Axes and ticks.
  svg << "<g stroke=\"#444\" fill=\"none\"><rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w
      << "\" height=\"" << plot_h << "\"/></g>\n<g fill=\"#444\">\n";
  const double xs = tick_step(x_hi - x_lo), ys = tick_step(y_hi - y_lo);
  for (double t = std::ceil(x_lo / xs) * xs; t <= x_hi + 1e-9 * xs; t += xs)
    svg << "<text x=\"" << num(sx(t)) << "\" y=\"" << num(kTop + plot_h + 18) << "\" text-anchor=\"middle\">"
        << num(t) << "</text>\n";
  for (double t = std::ceil(y_lo / ys) * ys; t <= y_hi + 1e-9 * ys; t += ys)
    svg << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(sy(t) + 4) << "\" text-anchor=\"end\">" << num(t)
        << "</text>\n";
  svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 10 << "\" text-anchor=\"middle\">input</text>\n";
  svg << "<text transform=\"translate(16 " << kTop + plot_h / 2
      << ") rotate(-90)\" text-anchor=\"middle\">output</text>\n</g>\n";

  const std::size_t stride = std::max<std::size_t>(1, (sample.size() + kMaxPoints - 1) / kMaxPoints);
  svg << "<g fill=\"#888\" fill-opacity=\"0.5\">\n";
  for (std::size_t i = 0; i < sample.size(); i += stride)
    svg << "<circle cx=\"" << num(sx(sample.x(i)[0])) << "\" cy=\"" << num(sy(sample.y(i))) << "\" r=\"1.5\"/>\n";
  svg << "</g>\n";

  std::size_t color = 0;
  double legend_y = kTop + 16;
  for (auto& [method, list] : by_method) {
    std::sort(list.begin(), list.end(), [](const ReportRow* a, const ReportRow* b) { return a->x[0] < b->x[0]; });
    const char* c = kPalette[color++ % std::size(kPalette)];
    svg << "<polygon fill=\"" << c << "\" fill-opacity=\"0.18\" stroke=\"none\" points=\"";
    for (const auto* r : list) svg << num(sx(r->x[0])) << ',' << num(sy(r->upper)) << ' ';
    for (auto it = list.rbegin(); it != list.rend(); ++it) svg << num(sx((*it)->x[0])) << ',' << num(sy((*it)->lower)) << ' ';
    svg << "\"/>\n<polyline fill=\"none\" stroke=\"" << c << "\" stroke-width=\"2\" points=\"";
    for (const auto* r : list) svg << num(sx(r->x[0])) << ',' << num(sy(r->point)) << ' ';
    svg << "\"/>\n";
    for (const auto* r : list)
      svg << "<line stroke=\"" << c << "\" x1=\"" << num(sx(r->x[0])) << "\" x2=\"" << num(sx(r->x[0])) << "\" y1=\""
          << num(sy(r->lower)) << "\" y2=\"" << num(sy(r->upper)) << "\"/>\n";
    svg << "<rect x=\"" << kLeft + 10 << "\" y=\"" << legend_y - 9 << "\" width=\"12\" height=\"10\" fill=\"" << c
        << "\"/><text x=\"" << kLeft + 28 << "\" y=\"" << legend_y << "\">" << escape(method) << "</text>\n";
    legend_y += 16;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace frontier::app
