#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "frontier/interval.hpp"
#include "frontier/limits.hpp"
#include "frontier/sample.hpp"
#include "frontier/tuning.hpp"

namespace frontier {

struct AbcConfig {
  HGrid grid;
  /// Prior window is [q_1, y_max + support_width / alpha_hat] where q_1 is
  /// the largest of the extreme quantile estimates and y_max the largest
  /// effective output.
  double support_width = 20.0;
  std::size_t chain_total = kDefaultChainTotal;
  std::size_t burn_in = kDefaultBurnIn;
  /// Proposal standard deviation in output units; empty selects it from a
  /// pilot chain.
  std::optional<double> proposal_sigma;
  std::size_t pilot_steps = 2000;
  std::size_t density_mc_draws = kDefaultDensityDraws;
  double alpha = 0.05;
  std::uint64_t seed = 0;

  static AbcConfig from_tuning(const TuningConfig& tuning, double alpha, std::uint64_t seed);
  void validate() const;
};

/// Flat prior on [lower, upper].
struct FlatPrior {
  double lower;
  double upper;
  double log_density(double q) const noexcept;
};

/// Data-dependent ingredients of the approximate likelihood at one query point.
struct AbcProblem {
  double p_hat = 0.0;
  std::size_t n_eff = 0;
  double alpha_hat = 0.0;
  double y_max = 0.0;
  /// Chain start on the standardized scale: y_max + 0.5 / alpha_hat.
  double initial_theta = 0.0;
  /// q_n(1 - k_l / n) for l = 1..L, decreasing in l.
  std::vector<double> estimates;
  /// estimates[0], the lower edge of the kernel support.
  double anchor = 0.0;
  /// alpha_hat * (anchor - estimates[l]); offsets[0] == 0.
  std::vector<double> offsets;
  FlatPrior prior{0.0, 0.0};
  double support_width = 0.0;
  /// Upper end of the prior window on the standardized scale.
  double theta_max = 0.0;
  DensityPool pool;
};

AbcProblem prepare_abc(const Sample& sample, std::span<const double> x0, const AbcConfig& cfg, double xi_hat);

/// log f(u_1..u_L; xi, p) + log prior(q_bar) with u_l = alpha_hat (q_bar - estimates[l]).
/// -inf when some u_l <= 0 or q_bar lies outside the prior window.
double posterior_log_kernel(double q_bar, std::span<const double> estimates, double alpha_hat,
                            const DensityPool& pool, const FlatPrior& prior);

/// The same kernel in standardized coordinates theta = alpha_hat (q_bar - anchor),
/// where the prior window is [0, theta_max]. The chain runs on this scale,
/// which makes it invariant under affine maps of the outputs.
double standardized_log_kernel(double theta, const AbcProblem& problem);

struct PosteriorChain {
  /// Post burn-in draws of the frontier value.
  std::vector<double> draws;
  /// The same draws on the standardized scale.
  std::vector<double> standardized;
  double acceptance_rate = 0.0;
  double initial_value = 0.0;
  double sigma_used = 0.0;
};

/// Random-walk Metropolis-Hastings with Gaussian proposals on the posterior of
/// the frontier value. One density pool serves the whole chain.
PosteriorChain run_mcmc(const AbcProblem& problem, const AbcConfig& cfg);
PosteriorChain run_mcmc(const Sample& sample, std::span<const double> x0, const AbcConfig& cfg, double xi_hat);

class PosteriorSummary {
 public:
  /// Throws EmptyChain for an empty chain and InvalidArgument unless
  /// 0 < tau_lower < tau_upper < 1.
  PosteriorSummary(const PosteriorChain& chain, double tau_lower, double tau_upper);

  /// Bayes estimate under squared loss.
  double mean() const noexcept { return mean_; }
  /// Bayes estimate under absolute loss.
  double median() const;
  double quantile(double tau) const;
  /// Interval between the posterior quantiles (1 - level)/2 and (1 + level)/2.
  IntervalEstimate ci(double level) const;

  double tau_lower() const noexcept { return tau_lower_; }
  double tau_upper() const noexcept { return tau_upper_; }
  double lower() const { return quantile(tau_lower_); }
  double upper() const { return quantile(tau_upper_); }

 private:
  std::vector<double> sorted_;
  double mean_ = 0.0;
  double tau_lower_;
  double tau_upper_;
};

PosteriorSummary posterior_summaries(const PosteriorChain& chain, double tau_lower, double tau_upper);

/// Full ABC pipeline: posterior median as point estimate, equal-tailed
/// posterior-quantile interval at level 1 - cfg.alpha.
IntervalEstimate run_abc(const Sample& sample, std::span<const double> x0, const AbcConfig& cfg, double xi_hat);

}  // namespace frontier
