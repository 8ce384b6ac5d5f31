#include "frontier/evt.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "frontier/error.hpp"

namespace frontier {

int h_of_k(double k, double p_hat) {
  if (!(k > 0.0) || !(p_hat > 0.0 && p_hat <= 1.0))
    fail(ErrorKind::InvalidArgument, "h_of_k needs k > 0 and p_hat in (0, 1]");
  const double kp = k * p_hat;
  if (std::abs(kp - std::round(kp)) <= 1e-9 * std::max(1.0, kp))
    fail(ErrorKind::IntegerIndex, "k * p_hat = " + std::to_string(kp) + " is an integer");
  return static_cast<int>(std::ceil(kp));
}

double k_of_h(int h, double p_hat) {
  if (h < 1 || !(p_hat > 0.0 && p_hat <= 1.0))
    fail(ErrorKind::InvalidArgument, "k_of_h needs h >= 1 and p_hat in (0, 1]");
  return (h - 0.5) / p_hat;
}

namespace {

double upper_quantile(const EffectiveSample& es, double t) { return check_quantile(es, 1.0 - t); }

}  // namespace

EVIndexEstimate pickands_xi(const EffectiveSample& es, double tail_fraction) {
  if (!(tail_fraction > 0.0 && 4.0 * tail_fraction < 1.0))
    fail(ErrorKind::InvalidArgument, "tail fraction must satisfy 0 < tau < 0.25");
  const double q1 = upper_quantile(es, tail_fraction);
  const double q2 = upper_quantile(es, 2.0 * tail_fraction);
  const double q4 = upper_quantile(es, 4.0 * tail_fraction);
  const double denominator = q1 - q2;
  if (denominator == 0.0) fail(ErrorKind::ZeroSpacing, "Q(tau) equals Q(2 tau)");
  const double ratio = (q2 - q4) / denominator;
  if (!(ratio > 0.0)) fail(ErrorKind::NonPositiveRatio, "spacing ratio is not positive");
  return {-std::log(ratio) / std::log(2.0), tail_fraction, EvMethod::SimplePickands};
}

EVIndexEstimate pickands_xi_weighted(const EffectiveSample& es, double tail_fraction,
                                     std::span<const double> weights, double base, double spacing) {
  if (weights.empty()) fail(ErrorKind::InvalidArgument, "at least one weight is required");
  if (!(base > 1.0) || !(spacing > 1.0))
    fail(ErrorKind::InvalidArgument, "base and spacing must exceed 1");
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12) fail(ErrorKind::InvalidArgument, "weights must sum to one");
  const auto levels = weights.size();
  const double top = spacing * std::pow(base, static_cast<double>(levels)) * tail_fraction;
  if (!(tail_fraction > 0.0 && top < 1.0))
    fail(ErrorKind::InvalidArgument, "largest tail level m * l^R * tau must stay below 1");

  double xi = 0.0;
  double lower_scale = 1.0;  // l^(r-1)
  for (std::size_t r = 1; r <= levels; ++r) {
    const double upper_scale = lower_scale * base;
    const double numerator = upper_quantile(es, spacing * upper_scale * tail_fraction) -
                             upper_quantile(es, upper_scale * tail_fraction);
    const double denominator = upper_quantile(es, spacing * lower_scale * tail_fraction) -
                               upper_quantile(es, lower_scale * tail_fraction);
    if (denominator == 0.0) fail(ErrorKind::ZeroSpacing, "zero quantile spacing at level r = " + std::to_string(r));
    const double ratio = numerator / denominator;
    if (!(ratio > 0.0)) fail(ErrorKind::NonPositiveRatio, "spacing ratio is not positive");
    xi += -weights[r - 1] / std::log(base) * std::log(ratio);
    lower_scale = upper_scale;
  }
  return {xi, tail_fraction, EvMethod::WeightedPickands};
}

double default_tail_fraction(std::size_t n_eff) noexcept { return n_eff >= 3500 ? 0.08 : 0.1; }

NormalizerEstimate normalizer(const EffectiveSample& es, double k0, double m) {
  if (!(k0 > 0.0) || !(m > 1.0)) fail(ErrorKind::InvalidArgument, "normalizer needs k0 > 0 and m > 1");
  const double n = static_cast<double>(es.n_total());
  const double spacing = check_quantile(es, 1.0 - k0 / n) - check_quantile(es, 1.0 - m * k0 / n);
  if (!(spacing > 0.0))
    fail(ErrorKind::ZeroDenominator, "extreme quantiles at k0 and m * k0 coincide; increase m or k0");
  return {1.0 / spacing, k0, m};
}

WeightPair bias_weights(double k1, double k2, double xi_hat) {
  if (!(k1 > 0.0 && k2 > 0.0)) fail(ErrorKind::InvalidArgument, "k1 and k2 must be positive");
  const double eta1 = std::pow(k1, -xi_hat);
  const double eta2 = std::pow(k2, -xi_hat);
  if (eta1 == eta2) fail(ErrorKind::DegenerateSystem, "k1^(-xi) equals k2^(-xi)");
  // One weight is always >= 1/2; call it big and the other small. Solving
  // for big and taking small = 1 - big is exact, but loses relative precision
  // in small when |small| << 1, so in that case solve for small instead.
  const double w1 = eta2 / (eta2 - eta1);
  const double w2 = eta1 / (eta1 - eta2);
  const bool first_big = w1 >= 0.5;
  const double big = first_big ? w1 : w2;
  const double small = first_big ? w2 : w1;
  const double other = std::abs(small) < 0.5 ? small : 1.0 - big;
  // The second branch leaves w1 + w2 off 1 by at most one ulp.
  const double main = std::abs(small) < 0.5 ? 1.0 - small : big;
  return first_big ? WeightPair{main, other, k1, k2, xi_hat} : WeightPair{other, main, k1, k2, xi_hat};
}

}  // namespace frontier
