#include "frontier/abc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "frontier/error.hpp"
#include "frontier/evt.hpp"
#include "frontier/random.hpp"

namespace frontier {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPilotSigma = 2.0;
constexpr double kStartOffset = 0.5;

struct ChainRun {
  std::vector<double> thetas;
  std::size_t accepted = 0;
};

ChainRun metropolis(const AbcProblem& problem, double sigma, std::size_t steps, std::size_t keep_from,
                    RandomStream& stream) {
  double theta = problem.initial_theta;
  double current = standardized_log_kernel(theta, problem);
  if (!std::isfinite(current))
    fail(ErrorKind::NonFiniteStart, "posterior kernel is -inf at the initial value; check the prior window");
  ChainRun run;
  run.thetas.reserve(steps - std::min(keep_from, steps));
  for (std::size_t i = 0; i < steps; ++i) {
    const double proposal = theta + sigma * stream.normal();
    const double log_u = std::log(stream.uniform_open_left());
    const double candidate = standardized_log_kernel(proposal, problem);
    if (candidate > kNegInf && log_u < candidate - current) {
      theta = proposal;
      current = candidate;
      ++run.accepted;
    }
    if (i >= keep_from) run.thetas.push_back(theta);
  }
  return run;
}

}  // namespace

AbcConfig AbcConfig::from_tuning(const TuningConfig& tuning, double alpha, std::uint64_t seed) {
  AbcConfig cfg;
  cfg.grid = tuning.grid;
  cfg.chain_total = tuning.chain_total;
  cfg.burn_in = tuning.burn_in;
  cfg.alpha = alpha;
  cfg.seed = seed;
  return cfg;
}

void AbcConfig::validate() const {
  grid.validate();
  if (!(support_width > 0.0)) fail(ErrorKind::InvalidArgument, "prior support width must be positive");
  if (burn_in >= chain_total) fail(ErrorKind::InvalidArgument, "burn-in must be shorter than the chain");
  if (density_mc_draws < 1) fail(ErrorKind::InvalidArgument, "density_mc_draws must be at least 1");
  if (proposal_sigma && !(*proposal_sigma > 0.0))
    fail(ErrorKind::InvalidArgument, "proposal sigma must be positive");
  if (!(alpha > 0.0 && alpha < 1.0)) fail(ErrorKind::InvalidArgument, "alpha must lie in (0, 1)");
}

double FlatPrior::log_density(double q) const noexcept {
  if (!(q >= lower && q <= upper)) return kNegInf;
  return -std::log(upper - lower);
}

AbcProblem prepare_abc(const Sample& sample, std::span<const double> x0, const AbcConfig& cfg, double xi_hat) {
  cfg.validate();
  if (!(xi_hat < 0.0))
    fail(ErrorKind::InvalidArgument, "the limit likelihood needs a negative EV index, got " + std::to_string(xi_hat));
  const EffectiveSample es = effective_sample(sample, x0);
  const double p_hat = es.p_hat();
  const KValues k = k_values(cfg.grid, p_hat);
  const double n = static_cast<double>(sample.size());
  const double alpha_hat = normalizer(es, k.k0, k.m).alpha_hat;

  std::vector<double> estimates;
  for (double kl : k.targets) estimates.push_back(check_quantile(es, 1.0 - kl / n));
  const double anchor = estimates.front();
  std::vector<double> offsets;
  for (double q : estimates) offsets.push_back(alpha_hat * (anchor - q));
  const double width = cfg.support_width;
  const double start = alpha_hat * (es.max() - anchor) + kStartOffset;
  return AbcProblem{
      .p_hat = p_hat,
      .n_eff = es.n_eff(),
      .alpha_hat = alpha_hat,
      .y_max = es.max(),
      .initial_theta = start,
      .estimates = std::move(estimates),
      .anchor = anchor,
      .offsets = std::move(offsets),
      .prior = FlatPrior{anchor, es.max() + width / alpha_hat},
      .support_width = width,
      .theta_max = start - kStartOffset + width,
      .pool = density_pool(cfg.grid, xi_hat, cfg.density_mc_draws, derive_seed(cfg.seed, {stream_tag("density")})),
  };
}

double posterior_log_kernel(double q_bar, std::span<const double> estimates, double alpha_hat,
                            const DensityPool& pool, const FlatPrior& prior) {
  const double log_prior = prior.log_density(q_bar);
  if (log_prior == kNegInf) return kNegInf;
  std::vector<double> u(estimates.size());
  for (std::size_t l = 0; l < u.size(); ++l) {
    u[l] = alpha_hat * (q_bar - estimates[l]);
    if (!(u[l] > 0.0)) return kNegInf;
  }
  return log_joint_density(u, pool) + log_prior;
}

double standardized_log_kernel(double theta, const AbcProblem& problem) {
  if (!(theta >= 0.0 && theta <= problem.theta_max)) return kNegInf;
  std::vector<double> u(problem.offsets.size());
  for (std::size_t l = 0; l < u.size(); ++l) {
    u[l] = theta + problem.offsets[l];
    if (!(u[l] > 0.0)) return kNegInf;
  }
  return log_joint_density(u, problem.pool) - std::log(problem.theta_max);
}

PosteriorChain run_mcmc(const AbcProblem& problem, const AbcConfig& cfg) {
  cfg.validate();
  double sigma = 0.0;
  if (cfg.proposal_sigma) {
    sigma = *cfg.proposal_sigma * problem.alpha_hat;
  } else {
    RandomStream pilot_stream(cfg.seed, {stream_tag("pilot")});
    auto pilot = metropolis(problem, kPilotSigma, cfg.pilot_steps, cfg.pilot_steps / 2, pilot_stream);
    std::sort(pilot.thetas.begin(), pilot.thetas.end());
    sigma = pilot.thetas.empty() ? 0.0
                                 : sorted_quantile(pilot.thetas, 0.975) - sorted_quantile(pilot.thetas, 0.025);
    if (!(sigma > 0.0)) sigma = kPilotSigma;
  }

  RandomStream stream(cfg.seed, {stream_tag("chain")});
  const ChainRun run = metropolis(problem, sigma, cfg.chain_total, cfg.burn_in, stream);

  PosteriorChain chain;
  chain.standardized = run.thetas;
  chain.draws.reserve(run.thetas.size());
  for (double theta : run.thetas) chain.draws.push_back(problem.anchor + theta / problem.alpha_hat);
  chain.acceptance_rate = static_cast<double>(run.accepted) / static_cast<double>(cfg.chain_total);
  chain.initial_value = problem.anchor + problem.initial_theta / problem.alpha_hat;
  chain.sigma_used = sigma / problem.alpha_hat;
  return chain;
}

PosteriorChain run_mcmc(const Sample& sample, std::span<const double> x0, const AbcConfig& cfg, double xi_hat) {
  return run_mcmc(prepare_abc(sample, x0, cfg, xi_hat), cfg);
}

PosteriorSummary::PosteriorSummary(const PosteriorChain& chain, double tau_lower, double tau_upper)
    : sorted_(chain.draws), tau_lower_(tau_lower), tau_upper_(tau_upper) {
  if (sorted_.empty()) fail(ErrorKind::EmptyChain, "posterior chain has no draws");
  if (!(tau_lower > 0.0 && tau_lower < tau_upper && tau_upper < 1.0))
    fail(ErrorKind::InvalidArgument, "need 0 < tau' < tau'' < 1");
  mean_ = std::accumulate(sorted_.begin(), sorted_.end(), 0.0) / static_cast<double>(sorted_.size());
  std::sort(sorted_.begin(), sorted_.end());
}

double PosteriorSummary::median() const { return quantile(0.5); }

double PosteriorSummary::quantile(double tau) const { return sorted_quantile(sorted_, tau); }

IntervalEstimate PosteriorSummary::ci(double level) const {
  if (!(level > 0.0 && level < 1.0)) fail(ErrorKind::InvalidArgument, "level must lie in (0, 1)");
  IntervalEstimate out;
  out.point = median();
  out.lower = quantile((1.0 - level) / 2.0);
  out.upper = quantile(1.0 - (1.0 - level) / 2.0);
  out.level = level;
  out.method = "abc";
  out.diagnostics["posterior_mean"] = mean_;
  return out;
}

PosteriorSummary posterior_summaries(const PosteriorChain& chain, double tau_lower, double tau_upper) {
  return PosteriorSummary(chain, tau_lower, tau_upper);
}

IntervalEstimate run_abc(const Sample& sample, std::span<const double> x0, const AbcConfig& cfg, double xi_hat) {
  const AbcProblem problem = prepare_abc(sample, x0, cfg, xi_hat);
  const PosteriorChain chain = run_mcmc(problem, cfg);
  const PosteriorSummary summary(chain, cfg.alpha / 2.0, 1.0 - cfg.alpha / 2.0);
  IntervalEstimate est = summary.ci(1.0 - cfg.alpha);
  est.method = "abc-L" + std::to_string(cfg.grid.size());

  // Share of draws in the top 5% of the prior window; large values mean the
  // window truncates the posterior.
  const double cutoff = 0.95 * problem.theta_max;
  const auto near_edge = std::count_if(chain.standardized.begin(), chain.standardized.end(),
                                       [&](double theta) { return theta >= cutoff; });
  const double edge_mass = static_cast<double>(near_edge) / static_cast<double>(chain.standardized.size());

  est.diagnostics.insert({
      {"n_eff", static_cast<double>(problem.n_eff)},
      {"p_hat", problem.p_hat},
      {"xi_hat", xi_hat},
      {"alpha_hat", problem.alpha_hat},
      {"acceptance_rate", chain.acceptance_rate},
      {"sigma", chain.sigma_used},
      {"L", static_cast<double>(cfg.grid.size())},
      {"prior_edge_mass", edge_mass},
      {"prior_warning", edge_mass > 0.01 ? 1.0 : 0.0},
  });
  return est;
}

}  // namespace frontier
