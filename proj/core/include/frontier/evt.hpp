#pragma once

#include <span>
#include <string>

#include "frontier/sample.hpp"

namespace frontier {

enum class EvMethod { SimplePickands, WeightedPickands };

struct EVIndexEstimate {
  double xi_hat;
  double tail_fraction;
  EvMethod method;
  /// Frontier inference expects xi_hat < 0; a nonnegative value is flagged
  /// here rather than rejected.
  bool frontier_compatible() const noexcept { return xi_hat < 0.0; }
};

struct NormalizerEstimate {
  double alpha_hat;
  double k0;
  double m;
};

/// Solution of w1 + w2 = 1 and w1 * k1^(-xi) + w2 * k2^(-xi) = 0.
struct WeightPair {
  double w1;
  double w2;
  double k1;
  double k2;
  double xi_used;
};

/// The effective order-statistic index of k: the unique integer in
/// (k * p_hat, k * p_hat + 1). Throws IntegerIndex when k * p_hat is integral.
int h_of_k(double k, double p_hat);

/// Inverse of h_of_k: k = (h - 0.5) / p_hat, which keeps k * p_hat half-way
/// between integers.
double k_of_h(int h, double p_hat);

/// Pickands estimator of the EV index from upper-tail quantile spacings at
/// levels 1 - tau, 1 - 2 tau, 1 - 4 tau:
///   xi = -log[(Q(4t) - Q(2t)) / (Q(2t) - Q(t))] / log 2,  Q(t) = q(1 - t).
/// Requires 0 < tail_fraction < 0.25.
EVIndexEstimate pickands_xi(const EffectiveSample& es, double tail_fraction);

/// Weighted multi-level variant:
///   xi = sum_r -w_r / log(l) * log[(Q(m l^r t) - Q(l^r t)) / (Q(m l^(r-1) t) - Q(l^(r-1) t))]
/// for r = 1..R with weights summing to one. weights = {1}, l = 2, m = 2
/// reproduces pickands_xi.
EVIndexEstimate pickands_xi_weighted(const EffectiveSample& es, double tail_fraction,
                                     std::span<const double> weights, double base = 2.0,
                                     double spacing = 2.0);

/// 0.1 below an effective size of 3500, 0.08 from there on.
double default_tail_fraction(std::size_t n_eff) noexcept;

/// alpha_hat = 1 / (q(1 - k0/n) - q(1 - m k0/n)) with n the total sample size
/// carried by `es`. Throws ZeroDenominator when the two quantiles coincide.
NormalizerEstimate normalizer(const EffectiveSample& es, double k0, double m);

WeightPair bias_weights(double k1, double k2, double xi_hat);

}  // namespace frontier
