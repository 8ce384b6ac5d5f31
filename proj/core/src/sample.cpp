#include "frontier/sample.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "frontier/error.hpp"

namespace frontier {

Sample::Sample(std::size_t p, std::vector<double> x, std::vector<double> y)
    : p_(p), x_(std::move(x)), y_(std::move(y)) {
  if (p_ == 0) fail(ErrorKind::InvalidArgument, "input dimension must be at least 1");
  if (y_.empty()) fail(ErrorKind::InvalidArgument, "sample must contain at least one observation");
  if (x_.size() != p_ * y_.size())
    fail(ErrorKind::InvalidArgument, "input matrix size does not match n * p");
  for (std::size_t i = 0; i < y_.size(); ++i) {
    if (!std::isfinite(y_[i]))
      fail(ErrorKind::InvalidArgument, "non-finite output at observation " + std::to_string(i));
    for (std::size_t j = 0; j < p_; ++j)
      if (!std::isfinite(x_[i * p_ + j]))
        fail(ErrorKind::InvalidArgument, "non-finite input at observation " + std::to_string(i));
  }
}

Sample Sample::from_xy(std::span<const double> x, std::span<const double> y) {
  return Sample(1, {x.begin(), x.end()}, {y.begin(), y.end()});
}

Sample Sample::with_affine_outputs(double a, double c) const {
  std::vector<double> y(y_.size());
  std::transform(y_.begin(), y_.end(), y.begin(), [=](double v) { return a * v + c; });
  return Sample(p_, x_, std::move(y));
}

bool Sample::dominated_by(std::size_t i, std::span<const double> x0) const noexcept {
  const double* row = x_.data() + i * p_;
  for (std::size_t j = 0; j < p_; ++j)
    if (!(row[j] <= x0[j])) return false;
  return true;
}

Sample reduce_outputs(std::span<const MultiObservation> observations) {
  if (observations.empty())
    fail(ErrorKind::InvalidArgument, "sample must contain at least one observation");
  const std::size_t p = observations.front().x.size();
  std::vector<double> x;
  std::vector<double> y;
  x.reserve(p * observations.size());
  y.reserve(observations.size());
  for (const auto& obs : observations) {
    if (obs.x.size() != p) fail(ErrorKind::InvalidArgument, "observations differ in input dimension");
    if (obs.y.empty()) fail(ErrorKind::InvalidArgument, "observation has no outputs");
    x.insert(x.end(), obs.x.begin(), obs.x.end());
    y.push_back(*std::max_element(obs.y.begin(), obs.y.end()));
  }
  return Sample(p, std::move(x), std::move(y));
}

EffectiveSample::EffectiveSample(std::vector<double> outputs, std::size_t n_total,
                                 std::vector<double> query_x)
    : y_(std::move(outputs)), n_total_(n_total), query_x_(std::move(query_x)) {
  if (y_.empty()) fail(ErrorKind::EmptyEffectiveSample, "no observation is dominated by the query point");
  if (n_total_ < y_.size())
    fail(ErrorKind::InvalidArgument, "total sample size smaller than effective sample");
  std::sort(y_.begin(), y_.end());
}

EffectiveSample effective_sample(const Sample& sample, std::span<const double> x0) {
  if (x0.size() != sample.dim())
    fail(ErrorKind::InvalidArgument, "query point has dimension " + std::to_string(x0.size()) +
                                         ", sample has " + std::to_string(sample.dim()));
  std::vector<double> y;
  for (std::size_t i = 0; i < sample.size(); ++i)
    if (sample.dominated_by(i, x0)) y.push_back(sample.y(i));
  return EffectiveSample(std::move(y), sample.size(), {x0.begin(), x0.end()});
}

std::size_t quantile_rank(double tau, std::size_t n) {
  if (!(tau > 0.0 && tau < 1.0))
    fail(ErrorKind::InvalidArgument, "quantile level must lie in (0, 1), got " + std::to_string(tau));
  const double position = tau * static_cast<double>(n);
  const double nearest = std::round(position);
  // Products like 0.9 * 10 should count as integral despite representation error.
  double rank = std::abs(position - nearest) <= 1e-9 * std::max(1.0, position) ? nearest
                                                                               : std::ceil(position);
  rank = std::clamp(rank, 1.0, static_cast<double>(n));
  return static_cast<std::size_t>(rank);
}

double sorted_quantile(std::span<const double> sorted, double tau) {
  if (sorted.empty()) fail(ErrorKind::EmptyEffectiveSample, "quantile of an empty sample");
  return sorted[quantile_rank(tau, sorted.size()) - 1];
}

double check_quantile(const EffectiveSample& es, double tau) { return sorted_quantile(es.y_values(), tau); }

double check_objective(std::span<const double> y, double tau, double q) {
  double total = 0.0;
  for (double v : y) {
    const double u = v - q;
    total += (tau - (u <= 0.0 ? 1.0 : 0.0)) * u;
  }
  return total;
}

}  // namespace frontier
