#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frontier/sample.hpp"
#include "frontier/tuning.hpp"

namespace frontier {

enum class DgpId { Dgp1, Dgp2 };

/// Simulation designs with known frontier. Both have EV index -0.5.
///   DGP1: X ~ U(0, 6), Y = sqrt(X) U, frontier sqrt(x), P(X <= x) = x / 6.
///   DGP2: (X, Y) uniform on {0 <= y <= x <= 6}, frontier x, P(X <= x) = (x / 6)^2.
struct DgpSpec {
  DgpId id = DgpId::Dgp1;
  std::size_t n = 5000;
  /// DGP2 only: accept-reject sampling instead of the inverse-CDF construction.
  bool rejection = false;

  double true_frontier(double x) const;
  double true_p0(double x) const;
  static constexpr double true_xi = -0.5;
};

Sample gen_dgp(const DgpSpec& spec, std::uint64_t seed);

enum class Method { Sub, Abc };

struct MethodSpec {
  Method method = Method::Sub;
  Preset preset = Preset::S1;
  /// Number of target quantiles; the subsampling engine always uses two.
  std::size_t L = 2;
  std::size_t subsamples = kDefaultSubsamples;
  std::size_t chain_total = kDefaultChainTotal;
  std::size_t burn_in = kDefaultBurnIn;
  std::size_t mc_draws = 2000;
  double alpha = 0.05;

  /// "sub-S1", "abc-L2-S1", ...
  std::string label() const;
};

struct StudySpec {
  DgpSpec dgp;
  std::vector<double> x_values;
  std::vector<MethodSpec> methods;
  std::size_t replications = 500;
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

/// Performance of one method at one query point.
struct StudyRow {
  std::string method;
  double x = 0.0;
  double truth = 0.0;
  std::size_t replications = 0;
  std::size_t failures = 0;
  double coverage = 0.0;
  double avg_length = 0.0;
  double bias = 0.0;
  double mad = 0.0;
  double rmse = 0.0;
  /// Share of replications with truth <= point.
  double share_above = 0.0;
  /// Posterior-mean metrics for ABC rows; NaN otherwise.
  double mean_bias = 0.0;
  double mean_mad = 0.0;
  double mean_rmse = 0.0;
  double avg_acceptance = 0.0;
  double runtime_seconds = 0.0;
};

struct StudyReport {
  std::vector<StudyRow> rows;

  /// Throws StudyFailed when some row lost 1% or more of its replications
  /// to engine errors.
  void check() const;
  bool ok() const noexcept;
};

/// Per-replication outcome, kept so reports can be rebuilt or inspected.
struct ReplicationOutcome {
  bool ok = false;
  double point = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double posterior_mean = 0.0;
  double acceptance = 0.0;
  double seconds = 0.0;
  std::string error;
};

/// Runs every (x, method) pair on `replications` fresh samples. Replication r
/// draws its sample from the substream (seed, r); all methods at one x share
/// the same EV-index estimate. The result does not depend on `workers`
/// except for the runtime column.
StudyReport run_study(const StudySpec& spec);

/// Aggregates outcomes of one (method, x) cell.
StudyRow summarize(const std::string& method, double x, double truth,
                   const std::vector<ReplicationOutcome>& outcomes);

}  // namespace frontier
