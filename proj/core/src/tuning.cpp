#include "frontier/tuning.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "frontier/error.hpp"
#include "frontier/evt.hpp"

namespace frontier {

std::string_view to_string(Preset preset) noexcept {
  switch (preset) {
    case Preset::S1: return "S1";
    case Preset::S2: return "S2";
    case Preset::Custom: return "custom";
  }
  return "custom";
}

Preset parse_preset(std::string_view name) {
  std::string upper(name);
  for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (upper == "S1") return Preset::S1;
  if (upper == "S2") return Preset::S2;
  if (upper == "AUTO" || upper == "CUSTOM") return Preset::Custom;
  fail(ErrorKind::InvalidArgument, "unknown preset '" + std::string(name) + "' (expected S1, S2 or auto)");
}

std::array<int, 5> preset_grid(Preset preset) {
  switch (preset) {
    case Preset::S1: return {15, 21, 27, 33, 39};
    case Preset::S2: return {10, 15, 20, 25, 30};
    case Preset::Custom: break;
  }
  fail(ErrorKind::InvalidArgument, "custom preset has no fixed grid");
}

HGrid preset_hgrid(Preset preset, std::size_t L) {
  if (L < 1 || L > 3) fail(ErrorKind::InvalidArgument, "presets provide 1 to 3 target indices");
  const auto g = preset_grid(preset);
  HGrid grid{g[0], g[1], {}};
  for (std::size_t l = 0; l < L; ++l) grid.targets.push_back(g[2 + l]);
  return grid;
}

HGrid auto_grid(int h1, int h2, std::size_t L) {
  if (h1 < 1 || L < 1) fail(ErrorKind::InvalidArgument, "auto_grid needs h1 >= 1 and L >= 1");
  const std::size_t count = L + 2;
  std::vector<int> points(count);
  const double step = static_cast<double>(h2 - h1) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    points[i] = static_cast<int>(std::lround(h1 + step * static_cast<double>(i)));
    if (i > 0 && points[i] <= points[i - 1]) points[i] = points[i - 1] + 1;
  }
  if (h2 < h1 || points.back() > h2)
    fail(ErrorKind::RangeTooNarrow, "[" + std::to_string(h1) + ", " + std::to_string(h2) + "] cannot hold " +
                                        std::to_string(count) + " distinct indices");
  HGrid grid{points[0], points[1], {points.begin() + 2, points.end()}};
  grid.validate();
  return grid;
}

int auto_grid_upper(std::size_t b, double p_hat) {
  return std::max(40, static_cast<int>(std::floor(0.1 * static_cast<double>(b) * p_hat)));
}

HGrid auto_grid_for(std::size_t b, double p_hat, std::size_t L, int h1) {
  if (L != 2 && L != 3) fail(ErrorKind::InvalidArgument, "auto grid supports L = 2 or 3");
  return auto_grid(h1, auto_grid_upper(b, p_hat), L);
}

std::size_t subsample_size(double n_eff, double p_hat) {
  if (!(n_eff >= 1.0) || !(p_hat > 0.0 && p_hat <= 1.0))
    fail(ErrorKind::InvalidArgument, "subsample_size needs n * p_hat >= 1 and p_hat in (0, 1]");
  auto pos = [](double v) { return std::max(v, 0.0); };
  const double N = n_eff;
  double bracket = 0.4 * N - pos(N - 300.0) / 7.0 - 2.3 / 28.0 * pos(N - 1000.0);
  if (N > 5000.0) bracket -= 7.0 / 40.0 * (1.0 - std::log(5000.0) / std::log(N)) * (N - 5000.0);
  if (!(bracket > 0.0)) fail(ErrorKind::NonPositiveB, "sample too small for the subsample rule");
  const double b = std::floor(bracket / p_hat);
  if (b < 1.0) fail(ErrorKind::NonPositiveB, "sample too small for the subsample rule");
  return static_cast<std::size_t>(b);
}

bool subsample_rule_in_range(double n_eff) noexcept { return n_eff >= 300.0 && n_eff <= 1e5; }

std::size_t default_L(std::size_t n_eff) noexcept { return n_eff < 2000 ? 2 : 3; }

KValues k_values(const HGrid& grid, double p_hat) {
  grid.validate();
  KValues k;
  k.k0 = k_of_h(grid.h0, p_hat);
  k.m = k_of_h(grid.hm0, p_hat) / k.k0;
  for (int h : grid.targets) k.targets.push_back(k_of_h(h, p_hat));
  return k;
}

TuningConfig make_tuning(Preset preset, std::size_t n, double p_hat, std::optional<std::size_t> L, int h1) {
  const double n_eff = static_cast<double>(n) * p_hat;
  const std::size_t levels = L.value_or(default_L(static_cast<std::size_t>(std::llround(n_eff))));
  TuningConfig cfg;
  cfg.preset = preset;
  cfg.b = subsample_size(n_eff, p_hat);
  if (levels != 2 && levels != 3) fail(ErrorKind::InvalidArgument, "L must be 2 or 3");
  cfg.grid = preset == Preset::Custom ? auto_grid_for(cfg.b, p_hat, levels, h1) : preset_hgrid(preset, levels);
  cfg.k = k_values(cfg.grid, p_hat);
  return cfg;
}

}  // namespace frontier
