#include "frontier/subsampling.hpp"

#include <algorithm>
#include <string>

#include "frontier/error.hpp"
#include "frontier/parallel.hpp"
#include "frontier/random.hpp"

namespace frontier {

SubsamplingConfig SubsamplingConfig::from_tuning(const TuningConfig& tuning, double alpha, std::uint64_t seed) {
  if (tuning.k.targets.size() < 2) fail(ErrorKind::InvalidArgument, "subsampling needs two target indices");
  SubsamplingConfig cfg;
  cfg.k0 = tuning.k.k0;
  cfg.m = tuning.k.m;
  cfg.k1 = tuning.k.targets[0];
  cfg.k2 = tuning.k.targets[1];
  cfg.b = tuning.b;
  cfg.subsamples = tuning.subsamples;
  cfg.alpha = alpha;
  cfg.seed = seed;
  return cfg;
}

void SubsamplingConfig::validate(std::size_t n, double p_hat) const {
  if (b < 1 || b >= n) fail(ErrorKind::InvalidArgument, "subsample size must satisfy 1 <= b < n");
  if (subsamples < 1) fail(ErrorKind::InvalidArgument, "at least one subsample is required");
  if (!(alpha > 0.0 && alpha < 1.0)) fail(ErrorKind::InvalidArgument, "alpha must lie in (0, 1)");
  if (!(m > 1.0) || !(k0 > 0.0)) fail(ErrorKind::InvalidArgument, "need k0 > 0 and m > 1");
  if (k1 == k2) fail(ErrorKind::InvalidArgument, "k1 and k2 must differ");
  h_of_k(k0, p_hat);
  h_of_k(m * k0, p_hat);
  h_of_k(k1, p_hat);
  h_of_k(k2, p_hat);
  if (!(m * k0 * p_hat > k0 * p_hat + 1.0))
    fail(ErrorKind::InvalidArgument, "need m k0 p_hat > k0 p_hat + 1");
  const double largest = std::max({m * k0, k1, k2});
  if (!(largest < static_cast<double>(b)))
    fail(ErrorKind::InvalidArgument, "subsample size too small for the quantile constants");
}

std::vector<std::size_t> subsample_indices(std::size_t n, std::size_t b, std::size_t ordinal, std::uint64_t seed,
                                           int attempt) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "cannot subsample an empty sample");
  RandomStream stream(seed, {stream_tag("subsample"), ordinal, static_cast<std::uint64_t>(attempt)});
  std::vector<std::size_t> out(b);
  for (auto& i : out) i = static_cast<std::size_t>(stream.index(n));
  return out;
}

SubsamplingRun run_subsampling_detailed(const Sample& sample, std::span<const double> x0,
                                        const SubsamplingConfig& cfg, double xi_hat) {
  const EffectiveSample es = effective_sample(sample, x0);
  const std::size_t n = sample.size();
  cfg.validate(n, es.p_hat());

  SubsamplingRun run;
  run.weights = bias_weights(cfg.k1, cfg.k2, xi_hat);
  const double nd = static_cast<double>(n);
  const double bd = static_cast<double>(cfg.b);
  run.q_n1 = check_quantile(es, 1.0 - cfg.k1 / nd);
  run.q_n2 = check_quantile(es, 1.0 - cfg.k2 / nd);
  run.alpha_hat = normalizer(es, cfg.k0, cfg.m).alpha_hat;
  run.q_nb1 = check_quantile(es, 1.0 - cfg.k1 / bd);
  run.q_nb2 = check_quantile(es, 1.0 - cfg.k2 / bd);

  std::vector<char> dominated(n);
  for (std::size_t i = 0; i < n; ++i) dominated[i] = sample.dominated_by(i, x0) ? 1 : 0;

  const double w1 = run.weights.w1;
  const double w2 = run.weights.w2;
  run.z_star.assign(cfg.subsamples, 0.0);
  std::vector<std::size_t> redraws(cfg.subsamples, 0);
  parallel_for(cfg.subsamples, cfg.workers, [&](std::size_t s) {
    std::vector<double> y;
    y.reserve(cfg.b);
    for (int attempt = 0; attempt <= cfg.max_redraws; ++attempt) {
      y.clear();
      for (std::size_t i : subsample_indices(n, cfg.b, s, cfg.seed, attempt))
        if (dominated[i]) y.push_back(sample.y(i));
      if (y.empty()) continue;
      std::sort(y.begin(), y.end());
      const double spacing = sorted_quantile(y, 1.0 - cfg.k0 / bd) - sorted_quantile(y, 1.0 - cfg.m * cfg.k0 / bd);
      if (!(spacing > 0.0)) continue;
      const double alpha_b = 1.0 / spacing;
      const double d1 = sorted_quantile(y, 1.0 - cfg.k1 / bd) - run.q_nb1;
      const double d2 = sorted_quantile(y, 1.0 - cfg.k2 / bd) - run.q_nb2;
      run.z_star[s] = alpha_b * (w1 * d1 + w2 * d2);
      redraws[s] = static_cast<std::size_t>(attempt);
      return;
    }
    fail(ErrorKind::RedrawLimit, "subsample " + std::to_string(s) + " stayed degenerate after " +
                                     std::to_string(cfg.max_redraws) + " redraws");
  });
  for (std::size_t r : redraws) run.redraws += r;

  std::vector<double> sorted = run.z_star;
  std::sort(sorted.begin(), sorted.end());
  const double c_low = sorted_quantile(sorted, cfg.alpha / 2.0);
  const double c_mid = sorted_quantile(sorted, 0.5);
  const double c_high = sorted_quantile(sorted, 1.0 - cfg.alpha / 2.0);

  const double combination = w1 * run.q_n1 + w2 * run.q_n2;
  auto& est = run.estimate;
  est.point = combination - c_mid / run.alpha_hat;
  est.lower = combination - c_high / run.alpha_hat;
  est.upper = combination - c_low / run.alpha_hat;
  est.level = 1.0 - cfg.alpha;
  est.method = "sub";
  est.diagnostics = {
      {"n_eff", static_cast<double>(es.n_eff())},
      {"p_hat", es.p_hat()},
      {"xi_hat", xi_hat},
      {"alpha_hat", run.alpha_hat},
      {"w1", w1},
      {"w2", w2},
      {"combination", combination},
      {"c_low", c_low},
      {"c_mid", c_mid},
      {"c_high", c_high},
      {"b", bd},
      {"subsamples", static_cast<double>(cfg.subsamples)},
      {"redraws", static_cast<double>(run.redraws)},
  };
  return run;
}

IntervalEstimate run_subsampling(const Sample& sample, std::span<const double> x0, const SubsamplingConfig& cfg,
                                 double xi_hat) {
  return run_subsampling_detailed(sample, x0, cfg, xi_hat).estimate;
}

}  // namespace frontier
