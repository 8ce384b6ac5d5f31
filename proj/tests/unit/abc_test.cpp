#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "frontier/abc.hpp"
#include "frontier/error.hpp"
#include "frontier/evt.hpp"
#include "frontier/simlab.hpp"

namespace frontier {
namespace {

Sample dyadic_sample(std::size_t n, std::uint64_t seed) {
  const Sample raw = gen_dgp(DgpSpec{DgpId::Dgp1, n}, seed);
  std::vector<double> x(raw.inputs().begin(), raw.inputs().end());
  std::vector<double> y(raw.outputs().begin(), raw.outputs().end());
  for (auto& v : y) v = std::ldexp(std::floor(std::ldexp(v, 30)), -30);
  return Sample::from_xy(x, y);
}

struct Setup {
  Sample sample;
  double x0[1] = {3.3};
  double xi_hat = 0.0;
  AbcConfig cfg;
};

Setup make_setup(std::uint64_t seed, std::size_t L = 2) {
  Setup s{dyadic_sample(5000, seed)};
  const auto es = effective_sample(s.sample, s.x0);
  s.xi_hat = pickands_xi(es, default_tail_fraction(es.n_eff())).xi_hat;
  auto tuning = make_tuning(Preset::S1, 5000, es.p_hat(), L);
  tuning.chain_total = 3000;
  tuning.burn_in = 1000;
  s.cfg = AbcConfig::from_tuning(tuning, 0.05, 1234);
  s.cfg.density_mc_draws = 500;
  return s;
}

TEST(AbcConfigTest, Validation) {
  AbcConfig cfg;
  cfg.grid = HGrid{15, 21, {27, 33}};
  EXPECT_NO_THROW(cfg.validate());
  auto bad = cfg;
  bad.burn_in = bad.chain_total;
  EXPECT_THROW(bad.validate(), FrontierError);
  bad = cfg;
  bad.support_width = 0.0;
  EXPECT_THROW(bad.validate(), FrontierError);
  bad = cfg;
  bad.proposal_sigma = -1.0;
  EXPECT_THROW(bad.validate(), FrontierError);
}

TEST(AbcProblemTest, WindowAndStart) {
  auto s = make_setup(1);
  const auto problem = prepare_abc(s.sample, s.x0, s.cfg, s.xi_hat);
  ASSERT_EQ(problem.estimates.size(), 2u);
  EXPECT_GT(problem.estimates[0], problem.estimates[1]);
  EXPECT_EQ(problem.offsets[0], 0.0);
  EXPECT_EQ(problem.prior.lower, problem.estimates[0]);
  EXPECT_DOUBLE_EQ(problem.prior.upper, problem.y_max + s.cfg.support_width / problem.alpha_hat);
  EXPECT_GT(problem.initial_theta, 0.0);
  EXPECT_LT(problem.initial_theta, problem.theta_max);
  EXPECT_TRUE(std::isfinite(standardized_log_kernel(problem.initial_theta, problem)));
  EXPECT_THROW(prepare_abc(s.sample, s.x0, s.cfg, 0.1), FrontierError);
}

TEST(AbcKernel, StandardizedKernelIsAChangeOfVariables) {
  auto s = make_setup(2);
  const auto problem = prepare_abc(s.sample, s.x0, s.cfg, s.xi_hat);
  // Flat prior on q_bar has density 1 / (theta_max / alpha_hat); on theta it
  // is 1 / theta_max, so the two log kernels differ by log(alpha_hat).
  const double t0 = problem.initial_theta;
  int finite = 0;
  for (double theta : {0.5, t0 - 0.4, t0, t0 + 1.0, t0 + 3.0, problem.theta_max - 0.1}) {
    const double q = problem.anchor + theta / problem.alpha_hat;
    const double on_q = posterior_log_kernel(q, problem.estimates, problem.alpha_hat, problem.pool, problem.prior);
    const double on_theta = standardized_log_kernel(theta, problem);
    if (!std::isfinite(on_q)) {
      // the pooled density can underflow far in the tail; both sides must agree
      EXPECT_EQ(on_theta, -INFINITY);
      continue;
    }
    ++finite;
    EXPECT_NEAR(on_q, on_theta + std::log(problem.alpha_hat), 1e-8 * std::max(1.0, std::abs(on_q)));
  }
  EXPECT_GE(finite, 3);
}

TEST(AbcKernel, OutsideSupportIsMinusInfinity) {
  auto s = make_setup(3);
  const auto problem = prepare_abc(s.sample, s.x0, s.cfg, s.xi_hat);
  const auto& prior = problem.prior;
  // Below the largest quantile estimate u_1 <= 0.
  EXPECT_EQ(posterior_log_kernel(problem.estimates[0] - 1e-3, problem.estimates, problem.alpha_hat, problem.pool,
                                 prior),
            -INFINITY);
  EXPECT_EQ(posterior_log_kernel(prior.upper + 1e-3, problem.estimates, problem.alpha_hat, problem.pool, prior),
            -INFINITY);
  EXPECT_EQ(standardized_log_kernel(-0.1, problem), -INFINITY);
  EXPECT_EQ(standardized_log_kernel(problem.theta_max + 0.1, problem), -INFINITY);
}

TEST(PosteriorSummaryTest, QuantilesOfKnownChain) {
  PosteriorChain chain;
  chain.draws.resize(100);
  std::iota(chain.draws.rbegin(), chain.draws.rend(), 1.0);
  const PosteriorSummary summary(chain, 0.025, 0.975);
  EXPECT_DOUBLE_EQ(summary.mean(), 50.5);
  EXPECT_EQ(summary.median(), 50.0);
  EXPECT_EQ(summary.lower(), 3.0);
  EXPECT_EQ(summary.upper(), 98.0);
  const auto ci = summary.ci(0.9);
  EXPECT_EQ(ci.lower, 5.0);
  EXPECT_EQ(ci.upper, 95.0);
  EXPECT_THROW(PosteriorSummary(PosteriorChain{}, 0.025, 0.975), FrontierError);
  EXPECT_THROW(PosteriorSummary(chain, 0.5, 0.4), FrontierError);
}

TEST(AbcRun, ChainIsReproducibleAndSensible) {
  auto s = make_setup(4);
  const auto a = run_mcmc(s.sample, s.x0, s.cfg, s.xi_hat);
  const auto b = run_mcmc(s.sample, s.x0, s.cfg, s.xi_hat);
  EXPECT_EQ(a.draws, b.draws);
  EXPECT_EQ(a.draws.size(), s.cfg.chain_total - s.cfg.burn_in);
  EXPECT_GT(a.acceptance_rate, 0.1);
  EXPECT_LT(a.acceptance_rate, 0.7);
  const auto est = run_abc(s.sample, s.x0, s.cfg, s.xi_hat);
  EXPECT_EQ(est.method, "abc-L2");
  EXPECT_LE(est.lower, est.point);
  EXPECT_LE(est.point, est.upper);
  EXPECT_EQ(est.diagnostics.at("L"), 2.0);
  EXPECT_GE(est.diagnostics.at("prior_edge_mass"), 0.0);
}

TEST(AbcRun, FixedProposalSigmaIsUsed) {
  auto s = make_setup(5);
  s.cfg.proposal_sigma = 0.05;
  const auto chain = run_mcmc(s.sample, s.x0, s.cfg, s.xi_hat);
  EXPECT_DOUBLE_EQ(chain.sigma_used, 0.05);
}

TEST(AbcRun, AffineEquivariance) {
  for (std::size_t L : {2u, 3u}) {
    auto s = make_setup(6, L);
    const Sample mapped = s.sample.with_affine_outputs(2.0, 3.0);
    const auto pa = prepare_abc(s.sample, s.x0, s.cfg, s.xi_hat);
    const auto pb = prepare_abc(mapped, s.x0, s.cfg, s.xi_hat);
    EXPECT_EQ(pa.offsets, pb.offsets);
    EXPECT_EQ(pa.initial_theta, pb.initial_theta);
    EXPECT_EQ(pa.theta_max, pb.theta_max);
    const auto ca = run_mcmc(pa, s.cfg);
    const auto cb = run_mcmc(pb, s.cfg);
    EXPECT_EQ(ca.standardized, cb.standardized);
    ASSERT_EQ(ca.draws.size(), cb.draws.size());
    for (std::size_t i = 0; i < ca.draws.size(); i += 97)
      EXPECT_NEAR(cb.draws[i], 2.0 * ca.draws[i] + 3.0, 1e-12 * std::abs(cb.draws[i]));
    const auto ea = run_abc(s.sample, s.x0, s.cfg, s.xi_hat);
    const auto eb = run_abc(mapped, s.x0, s.cfg, s.xi_hat);
    EXPECT_NEAR(eb.point, 2.0 * ea.point + 3.0, 1e-12 * std::abs(eb.point));
    EXPECT_NEAR(eb.lower, 2.0 * ea.lower + 3.0, 1e-12 * std::abs(eb.lower));
    EXPECT_NEAR(eb.upper, 2.0 * ea.upper + 3.0, 1e-12 * std::abs(eb.upper));
  }
}

}  // namespace
}  // namespace frontier
