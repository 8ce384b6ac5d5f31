#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace frontier {

/// One observation before output reduction: inputs x (length p) and
/// outputs y (length q).
struct MultiObservation {
  std::vector<double> x;
  std::vector<double> y;
};

/// i.i.d. input/output pairs with scalar output. Inputs are stored row-major
/// (n rows of p columns).
class Sample {
 public:
  Sample() = default;

  /// Throws InvalidArgument unless p >= 1, x.size() == p * y.size(),
  /// y is nonempty and every value is finite.
  Sample(std::size_t p, std::vector<double> x, std::vector<double> y);

  /// Single-input convenience constructor.
  static Sample from_xy(std::span<const double> x, std::span<const double> y);

  std::size_t size() const noexcept { return y_.size(); }
  std::size_t dim() const noexcept { return p_; }

  std::span<const double> x(std::size_t i) const noexcept { return {x_.data() + i * p_, p_}; }
  double y(std::size_t i) const noexcept { return y_[i]; }

  std::span<const double> inputs() const noexcept { return x_; }
  std::span<const double> outputs() const noexcept { return y_; }

  /// Same inputs, outputs replaced by a * y + c.
  Sample with_affine_outputs(double a, double c) const;

  /// True when observation i has x_i <= x0 in every coordinate.
  bool dominated_by(std::size_t i, std::span<const double> x0) const noexcept;

 private:
  std::size_t p_ = 1;
  std::vector<double> x_;
  std::vector<double> y_;
};

/// Collapses q-dimensional outputs to their componentwise maximum.
Sample reduce_outputs(std::span<const MultiObservation> observations);

/// Outputs of the observations whose inputs are dominated by the query point.
/// y_values() is kept sorted ascending so order statistics are O(1).
class EffectiveSample {
 public:
  /// Builds from already-filtered outputs; throws EmptyEffectiveSample when
  /// `outputs` is empty and InvalidArgument when n_total < outputs.size().
  EffectiveSample(std::vector<double> outputs, std::size_t n_total,
                  std::vector<double> query_x = {});

  std::span<const double> y_values() const noexcept { return y_; }
  std::size_t n_eff() const noexcept { return y_.size(); }
  std::size_t n_total() const noexcept { return n_total_; }
  double p_hat() const noexcept {
    return static_cast<double>(y_.size()) / static_cast<double>(n_total_);
  }
  double max() const noexcept { return y_.back(); }
  std::span<const double> query_x() const noexcept { return query_x_; }

 private:
  std::vector<double> y_;
  std::size_t n_total_;
  std::vector<double> query_x_;
};

EffectiveSample effective_sample(const Sample& sample, std::span<const double> x0);

/// Order-statistic rank (1-based) chosen for level tau in a sample of size n:
/// ceil(tau * n), or tau * n itself when that product is an integer.
std::size_t quantile_rank(double tau, std::size_t n);

/// Minimizer of sum_i rho_tau(y_i - q) over an ascending-sorted sample, with
/// rho_tau(u) = (tau - 1{u <= 0}) u. When the minimizer set is an interval,
/// its lower endpoint is returned. Throws InvalidArgument unless 0 < tau < 1.
double sorted_quantile(std::span<const double> sorted, double tau);

/// Extreme/intermediate quantile of the effective sample at level tau.
double check_quantile(const EffectiveSample& es, double tau);

/// The check objective sum_i rho_tau(y_i - q).
double check_objective(std::span<const double> y, double tau, double q);

}  // namespace frontier
