#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace frontier {

/// Effective order-statistic indices: h(k0), h(m k0), and the targets
/// h(k1) < ... < h(kL). All must be strictly increasing.
struct HGrid {
  int h0 = 0;
  int hm0 = 0;
  std::vector<int> targets;

  std::size_t size() const noexcept { return targets.size(); }
  int max_index() const noexcept { return targets.empty() ? hm0 : targets.back(); }

  /// Throws InvalidOrdering unless 1 <= h0 < hm0 < targets[0] < ... and
  /// targets is nonempty.
  void validate() const;

  /// Grid restricted to the first `count` targets.
  HGrid truncated(std::size_t count) const;

  friend bool operator==(const HGrid&, const HGrid&) = default;
};

/// One realization of the normalized limit vector. Entries are negative and
/// strictly decreasing along the targets.
struct LimitDraw {
  std::vector<double> z_tilde;
};

/// Limit vector from given partial sums gamma[h - 1] = E_1 + ... + E_h of
/// standard exponentials: Z(h) = -(gamma_h / p)^(-xi) and
/// z_tilde_l = Z(h_l) / (Z(h0) - Z(hm0)). The factor p^xi is common to
/// numerator and denominator and is dropped before evaluation, so the result
/// does not depend on p at all.
LimitDraw limit_from_partial_sums(std::span<const double> gamma, const HGrid& grid, double xi,
                                  double p = 1.0);

/// `count` independent draws; draw d uses the substream (seed, d), so the
/// output is identical for any worker count.
std::vector<LimitDraw> simulate_limit(const HGrid& grid, double xi, std::size_t count,
                                      std::uint64_t seed, unsigned workers = 1, double p = 1.0);

struct DensityValue {
  double value = 0.0;
  double mc_se = 0.0;
  std::size_t draws = 0;
  /// log(value) computed without underflow; -inf outside the support.
  double log_value = 0.0;
};

/// Literal evaluation of the joint-density integrand for a single (s, t):
///   (-1/xi)^L u~^(-L/xi) prod_l u_l^(-1/xi - 1) f_{h_l - h_(l-1)}(v_l - v_(l-1))
/// with u~ = (t + s)^(-xi) - s^(-xi), v_l = (u_l u~)^(-1/xi), v_0 = t + s,
/// h_0 = h(m k0), and f_h the Gamma(h, 1) density. Zero off the support.
double density_integrand(std::span<const double> u, double xi, const HGrid& grid, double s, double t);

/// Fixed set of (s, t) ~ Gamma(h0) x Gamma(hm0 - h0) pairs with the
/// xi-dependent per-pair terms precomputed. Evaluating against one pool is
/// deterministic, which turns the Monte Carlo density into a smooth function
/// of u.
class DensityPool {
 public:
  DensityPool(HGrid grid, double xi, std::vector<double> s, std::vector<double> t);

  const HGrid& grid() const noexcept { return grid_; }
  double xi() const noexcept { return xi_; }
  std::size_t size() const noexcept { return s_.size(); }
  std::span<const double> s() const noexcept { return s_; }
  std::span<const double> t() const noexcept { return t_; }

  /// Monte Carlo average of the integrand. Inputs outside the support
  /// (nonpositive or non-increasing u) give value 0 and log_value -inf.
  DensityValue evaluate(std::span<const double> u) const;

 private:
  HGrid grid_;
  double xi_;
  std::vector<double> s_;
  std::vector<double> t_;
  std::vector<double> v0_;       // s + t
  std::vector<double> scale_;    // u~^(-1/xi)
  std::vector<double> log_base_; // L log(-1/xi) - (L/xi) log u~
  std::vector<int> shapes_;      // h_l - h_(l-1)
  std::vector<double> log_gamma_shapes_;
};

inline constexpr std::size_t kDefaultDensityDraws = 2000;

DensityPool density_pool(const HGrid& grid, double xi, std::size_t mc_draws, std::uint64_t seed);

/// Density of the magnitudes (|z_tilde_1|, ..., |z_tilde_L|). Throws
/// NonPositiveInput for u_l <= 0 and InvalidOrdering unless u is strictly
/// increasing.
DensityValue joint_density(std::span<const double> u, const DensityPool& pool);
DensityValue joint_density(std::span<const double> u, double xi, const HGrid& grid,
                           std::size_t mc_draws, std::uint64_t seed);

/// log of the pooled density; -inf outside the support, never throws for
/// out-of-support u.
double log_joint_density(std::span<const double> u, const DensityPool& pool);

}  // namespace frontier
