#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frontier/limits.hpp"

namespace frontier {

enum class Preset { S1, S2, Custom };

std::string_view to_string(Preset preset) noexcept;
/// Parses "S1", "S2" (case-insensitive); throws InvalidArgument otherwise.
Preset parse_preset(std::string_view name);

/// (h(k0), h(m k0), h(k1), h(k2), h(k3)) for a named preset:
/// S1 = (15, 21, 27, 33, 39), S2 = (10, 15, 20, 25, 30).
std::array<int, 5> preset_grid(Preset preset);

/// Preset indices as an HGrid with the first L targets (L in {1, 2, 3}).
HGrid preset_hgrid(Preset preset, std::size_t L);

/// L + 2 equally spaced integers on [h1, h2], rounded to nearest and then made
/// distinct by incrementing. Throws RangeTooNarrow if they do not fit.
HGrid auto_grid(int h1, int h2, std::size_t L);

/// Upper bound of the index range: max(40, 0.1 * b * p_hat).
int auto_grid_upper(std::size_t b, double p_hat);

/// auto_grid with h2 = auto_grid_upper(b, p_hat). L must be 2 or 3.
HGrid auto_grid_for(std::size_t b, double p_hat, std::size_t L, int h1);

/// Subsample size rule for an effective sample of size n_eff = n * p_hat:
///   b = floor([0.4 N - (N - 300)+ / 7 - 2.3 (N - 1000)+ / 28
///              - 7/40 (1 - log 5000 / log N) (N - 5000)+] / p_hat).
/// Throws NonPositiveB when the bracket is not positive.
std::size_t subsample_size(double n_eff, double p_hat);

/// True when n_eff lies in the range the subsample rule was calibrated on.
bool subsample_rule_in_range(double n_eff) noexcept;

/// L = 2 below an effective size of 2000, else 3.
std::size_t default_L(std::size_t n_eff) noexcept;

inline constexpr std::size_t kDefaultSubsamples = 5000;
inline constexpr std::size_t kDefaultChainTotal = 20000;
inline constexpr std::size_t kDefaultBurnIn = 10000;

/// Quantile constants k for each grid index under p_hat, via k_of_h.
struct KValues {
  double k0;
  double m;
  std::vector<double> targets;
};

KValues k_values(const HGrid& grid, double p_hat);

/// Complete tuning for one query point.
struct TuningConfig {
  HGrid grid;
  KValues k;
  std::size_t b = 0;
  std::size_t subsamples = kDefaultSubsamples;
  std::size_t chain_total = kDefaultChainTotal;
  std::size_t burn_in = kDefaultBurnIn;
  Preset preset = Preset::S1;
};

/// Tuning from a preset (or from auto_grid when preset is Custom and h1 is
/// given). L defaults to default_L(n_eff).
TuningConfig make_tuning(Preset preset, std::size_t n, double p_hat,
                         std::optional<std::size_t> L = std::nullopt, int h1 = 10);

}  // namespace frontier
