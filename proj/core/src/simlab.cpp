#include "frontier/simlab.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "frontier/abc.hpp"
#include "frontier/error.hpp"
#include "frontier/evt.hpp"
#include "frontier/parallel.hpp"
#include "frontier/random.hpp"
#include "frontier/subsampling.hpp"

namespace frontier {

double DgpSpec::true_frontier(double x) const { return id == DgpId::Dgp1 ? std::sqrt(x) : x; }

double DgpSpec::true_p0(double x) const {
  const double share = std::clamp(x / 6.0, 0.0, 1.0);
  return id == DgpId::Dgp1 ? share : share * share;
}

Sample gen_dgp(const DgpSpec& spec, std::uint64_t seed) {
  if (spec.n == 0) fail(ErrorKind::InvalidArgument, "sample size must be positive");
  RandomStream stream(seed, {stream_tag("dgp")});
  std::vector<double> x(spec.n);
  std::vector<double> y(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    if (spec.id == DgpId::Dgp1) {
      x[i] = 6.0 * stream.uniform();
      y[i] = std::sqrt(x[i]) * stream.uniform();
    } else if (!spec.rejection) {
      x[i] = 6.0 * std::sqrt(stream.uniform());
      y[i] = x[i] * stream.uniform();
    } else {
      double a = 0.0;
      double b = 0.0;
      do {
        a = 6.0 * stream.uniform();
        b = 6.0 * stream.uniform();
      } while (b > a);
      x[i] = a;
      y[i] = b;
    }
  }
  return Sample(1, std::move(x), std::move(y));
}

std::string MethodSpec::label() const {
  const std::string preset_name(to_string(preset));
  if (method == Method::Sub) return "sub-" + preset_name;
  return "abc-L" + std::to_string(L) + "-" + preset_name;
}

void StudyReport::check() const {
  for (const auto& row : rows)
    if (row.replications > 0 && 100 * row.failures >= row.replications)
      fail(ErrorKind::StudyFailed, row.method + " at x = " + std::to_string(row.x) + " failed in " +
                                       std::to_string(row.failures) + " of " + std::to_string(row.replications) +
                                       " replications");
}

bool StudyReport::ok() const noexcept {
  for (const auto& row : rows)
    if (row.replications > 0 && 100 * row.failures >= row.replications) return false;
  return true;
}

StudyRow summarize(const std::string& method, double x, double truth, const std::vector<ReplicationOutcome>& outcomes) {
  StudyRow row;
  row.method = method;
  row.x = x;
  row.truth = truth;
  row.replications = outcomes.size();
  const bool is_abc = method.rfind("abc", 0) == 0;
  std::size_t used = 0;
  double covered = 0.0, length = 0.0, err = 0.0, abs_err = 0.0, sq_err = 0.0, above = 0.0;
  double m_err = 0.0, m_abs = 0.0, m_sq = 0.0, acceptance = 0.0, seconds = 0.0;
  for (const auto& o : outcomes) {
    seconds += o.seconds;
    if (!o.ok) {
      ++row.failures;
      continue;
    }
    ++used;
    covered += (o.lower <= truth && truth <= o.upper) ? 1.0 : 0.0;
    length += o.upper - o.lower;
    const double e = o.point - truth;
    err += e;
    abs_err += std::abs(e);
    sq_err += e * e;
    above += truth <= o.point ? 1.0 : 0.0;
    const double me = o.posterior_mean - truth;
    m_err += me;
    m_abs += std::abs(me);
    m_sq += me * me;
    acceptance += o.acceptance;
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double k = static_cast<double>(used);
  row.runtime_seconds = seconds;
  if (used == 0) {
    row.coverage = row.avg_length = row.bias = row.mad = row.rmse = row.share_above = nan;
    row.mean_bias = row.mean_mad = row.mean_rmse = row.avg_acceptance = nan;
    return row;
  }
  row.coverage = covered / k;
  row.avg_length = length / k;
  row.bias = err / k;
  row.mad = abs_err / k;
  row.rmse = std::sqrt(sq_err / k);
  row.share_above = above / k;
  if (is_abc) {
    row.mean_bias = m_err / k;
    row.mean_mad = m_abs / k;
    row.mean_rmse = std::sqrt(m_sq / k);
    row.avg_acceptance = acceptance / k;
  } else {
    row.mean_bias = row.mean_mad = row.mean_rmse = row.avg_acceptance = nan;
  }
  return row;
}

StudyReport run_study(const StudySpec& spec) {
  if (spec.replications < 1) fail(ErrorKind::InvalidArgument, "at least one replication is required");
  if (spec.x_values.empty() || spec.methods.empty())
    fail(ErrorKind::InvalidArgument, "study needs at least one x value and one method");

  const std::size_t cells = spec.x_values.size() * spec.methods.size();
  // outcomes[r][cell] with cell = xi * methods + mi
  std::vector<std::vector<ReplicationOutcome>> outcomes(spec.replications,
                                                        std::vector<ReplicationOutcome>(cells));

  parallel_for(spec.replications, spec.workers, [&](std::size_t r) {
    const Sample sample = gen_dgp(spec.dgp, derive_seed(spec.seed, {stream_tag("replication"), r}));
    for (std::size_t xi = 0; xi < spec.x_values.size(); ++xi) {
      const double x0[1] = {spec.x_values[xi]};
      double xi_hat = 0.0;
      std::size_t n_eff = 0;
      std::string setup_error;
      try {
        const EffectiveSample es = effective_sample(sample, x0);
        n_eff = es.n_eff();
        xi_hat = pickands_xi(es, default_tail_fraction(n_eff)).xi_hat;
      } catch (const FrontierError& e) {
        setup_error = e.what();
      }
      for (std::size_t mi = 0; mi < spec.methods.size(); ++mi) {
        const MethodSpec& method = spec.methods[mi];
        ReplicationOutcome& out = outcomes[r][xi * spec.methods.size() + mi];
        if (!setup_error.empty()) {
          out.error = setup_error;
          continue;
        }
        const auto start = std::chrono::steady_clock::now();
        const std::uint64_t engine_seed =
            derive_seed(spec.seed, {stream_tag("engine"), r, xi, mi});
        try {
          const double p_hat = static_cast<double>(n_eff) / static_cast<double>(sample.size());
          TuningConfig tuning = make_tuning(method.preset, sample.size(), p_hat, method.method == Method::Sub ? 2 : method.L);
          tuning.subsamples = method.subsamples;
          tuning.chain_total = method.chain_total;
          tuning.burn_in = method.burn_in;
          IntervalEstimate est;
          if (method.method == Method::Sub) {
            est = run_subsampling(sample, x0, SubsamplingConfig::from_tuning(tuning, method.alpha, engine_seed), xi_hat);
          } else {
            AbcConfig cfg = AbcConfig::from_tuning(tuning, method.alpha, engine_seed);
            cfg.density_mc_draws = method.mc_draws;
            est = run_abc(sample, x0, cfg, xi_hat);
            out.posterior_mean = est.diagnostics.at("posterior_mean");
            out.acceptance = est.diagnostics.at("acceptance_rate");
          }
          out.ok = true;
          out.point = est.point;
          out.lower = est.lower;
          out.upper = est.upper;
        } catch (const FrontierError& e) {
          out.error = e.what();
        }
        out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      }
    }
  });

  StudyReport report;
  for (std::size_t xi = 0; xi < spec.x_values.size(); ++xi) {
    for (std::size_t mi = 0; mi < spec.methods.size(); ++mi) {
      std::vector<ReplicationOutcome> cell;
      cell.reserve(spec.replications);
      for (std::size_t r = 0; r < spec.replications; ++r) cell.push_back(outcomes[r][xi * spec.methods.size() + mi]);
      const double x = spec.x_values[xi];
      report.rows.push_back(summarize(spec.methods[mi].label(), x, spec.dgp.true_frontier(x), cell));
    }
  }
  return report;
}

}  // namespace frontier
