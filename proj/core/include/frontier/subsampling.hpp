#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "frontier/evt.hpp"
#include "frontier/interval.hpp"
#include "frontier/sample.hpp"
#include "frontier/tuning.hpp"

namespace frontier {

struct SubsamplingConfig {
  double k0 = 0.0;
  double m = 0.0;
  double k1 = 0.0;
  double k2 = 0.0;
  std::size_t b = 0;
  std::size_t subsamples = kDefaultSubsamples;
  double alpha = 0.05;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  /// Redraws allowed per subsample ordinal when its effective set is empty
  /// or its normalizer denominator vanishes.
  int max_redraws = 100;

  /// Uses k0, m and the first two target constants of `tuning`.
  static SubsamplingConfig from_tuning(const TuningConfig& tuning, double alpha, std::uint64_t seed);

  /// Throws InvalidArgument / IntegerIndex when the configuration is unusable
  /// for a sample of size n with dominance share p_hat.
  void validate(std::size_t n, double p_hat) const;
};

/// b indices drawn uniformly with replacement from [0, n); a deterministic
/// function of (seed, ordinal, attempt).
std::vector<std::size_t> subsample_indices(std::size_t n, std::size_t b, std::size_t ordinal,
                                           std::uint64_t seed, int attempt = 0);

/// Everything computed by one subsampling run.
struct SubsamplingRun {
  IntervalEstimate estimate;
  WeightPair weights;
  double alpha_hat = 0.0;
  /// Full-sample quantiles at levels 1 - k1/n, 1 - k2/n.
  double q_n1 = 0.0;
  double q_n2 = 0.0;
  /// Full-sample quantiles at the subsample levels 1 - k1/b, 1 - k2/b.
  double q_nb1 = 0.0;
  double q_nb2 = 0.0;
  /// Normalized subsample statistics in ordinal order.
  std::vector<double> z_star;
  std::size_t redraws = 0;
};

SubsamplingRun run_subsampling_detailed(const Sample& sample, std::span<const double> x0,
                                        const SubsamplingConfig& cfg, double xi_hat);

/// Median-unbiased frontier estimate and (1 - alpha) interval from the
/// bias-cancelling combination of two extreme quantiles.
IntervalEstimate run_subsampling(const Sample& sample, std::span<const double> x0, const SubsamplingConfig& cfg,
                                 double xi_hat);

}  // namespace frontier
