#include "frontier/limits.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "frontier/error.hpp"
#include "frontier/parallel.hpp"
#include "frontier/random.hpp"

namespace frontier {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_negative_xi(double xi) {
  if (!(xi < 0.0)) fail(ErrorKind::InvalidArgument, "limit laws need xi < 0, got " + std::to_string(xi));
}

double log_gamma_pdf(int shape, double w) {
  if (!(w > 0.0)) return kNegInf;
  return (shape - 1) * std::log(w) - w - std::lgamma(static_cast<double>(shape));
}

bool strictly_increasing_positive(std::span<const double> u) {
  for (std::size_t l = 0; l < u.size(); ++l) {
    if (!(u[l] > 0.0)) return false;
    if (l > 0 && !(u[l] > u[l - 1])) return false;
  }
  return true;
}

}  // namespace

void HGrid::validate() const {
  if (targets.empty()) fail(ErrorKind::InvalidArgument, "h-grid needs at least one target index");
  if (h0 < 1) fail(ErrorKind::InvalidOrdering, "h(k0) must be at least 1");
  int previous = h0;
  auto check = [&](int h) {
    if (h <= previous)
      fail(ErrorKind::InvalidOrdering, "h-grid must be strictly increasing (" + std::to_string(previous) +
                                           " then " + std::to_string(h) + ")");
    previous = h;
  };
  check(hm0);
  for (int h : targets) check(h);
}

HGrid HGrid::truncated(std::size_t count) const {
  HGrid out{h0, hm0, {}};
  out.targets.assign(targets.begin(), targets.begin() + std::min(count, targets.size()));
  return out;
}

LimitDraw limit_from_partial_sums(std::span<const double> gamma, const HGrid& grid, double xi, double p) {
  grid.validate();
  require_negative_xi(xi);
  if (!(p > 0.0)) fail(ErrorKind::InvalidArgument, "p must be positive");
  if (gamma.size() < static_cast<std::size_t>(grid.max_index()))
    fail(ErrorKind::InvalidArgument, "not enough partial sums for the h-grid");
  auto z = [&](int h) { return -std::pow(gamma[h - 1], -xi); };
  const double denominator = z(grid.h0) - z(grid.hm0);
  LimitDraw draw;
  draw.z_tilde.reserve(grid.size());
  for (int h : grid.targets) draw.z_tilde.push_back(z(h) / denominator);
  return draw;
}

std::vector<LimitDraw> simulate_limit(const HGrid& grid, double xi, std::size_t count, std::uint64_t seed,
                                      unsigned workers, double p) {
  grid.validate();
  require_negative_xi(xi);
  std::vector<LimitDraw> draws(count);
  const auto depth = static_cast<std::size_t>(grid.max_index());
  parallel_for(count, workers, [&](std::size_t d) {
    RandomStream stream(seed, {stream_tag("limit"), d});
    std::vector<double> gamma(depth);
    double total = 0.0;
    for (auto& g : gamma) g = (total += stream.exponential());
    draws[d] = limit_from_partial_sums(gamma, grid, xi, p);
  });
  return draws;
}

double density_integrand(std::span<const double> u, double xi, const HGrid& grid, double s, double t) {
  grid.validate();
  require_negative_xi(xi);
  if (u.size() != grid.size()) fail(ErrorKind::InvalidArgument, "u has the wrong length");
  if (!strictly_increasing_positive(u)) return 0.0;
  const double L = static_cast<double>(u.size());
  const double u_tilde = std::pow(t + s, -xi) - std::pow(s, -xi);
  double log_value = L * std::log(-1.0 / xi) + (-L / xi) * std::log(u_tilde);
  double previous_v = t + s;
  int previous_h = grid.hm0;
  for (std::size_t l = 0; l < u.size(); ++l) {
    const double v = std::pow(u[l] * u_tilde, -1.0 / xi);
    log_value += (-1.0 / xi - 1.0) * std::log(u[l]);
    log_value += log_gamma_pdf(grid.targets[l] - previous_h, v - previous_v);
    previous_v = v;
    previous_h = grid.targets[l];
  }
  return std::exp(log_value);
}

DensityPool::DensityPool(HGrid grid, double xi, std::vector<double> s, std::vector<double> t)
    : grid_(std::move(grid)), xi_(xi), s_(std::move(s)), t_(std::move(t)) {
  grid_.validate();
  require_negative_xi(xi_);
  if (s_.empty() || s_.size() != t_.size())
    fail(ErrorKind::InvalidArgument, "density pool needs matching, nonempty s and t draws");
  const double L = static_cast<double>(grid_.size());
  const std::size_t n = s_.size();
  v0_.resize(n);
  scale_.resize(n);
  log_base_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double u_tilde = std::pow(t_[j] + s_[j], -xi_) - std::pow(s_[j], -xi_);
    v0_[j] = s_[j] + t_[j];
    scale_[j] = std::pow(u_tilde, -1.0 / xi_);
    log_base_[j] = L * std::log(-1.0 / xi_) + (-L / xi_) * std::log(u_tilde);
  }
  int previous = grid_.hm0;
  for (int h : grid_.targets) {
    shapes_.push_back(h - previous);
    log_gamma_shapes_.push_back(std::lgamma(static_cast<double>(h - previous)));
    previous = h;
  }
}

DensityValue DensityPool::evaluate(std::span<const double> u) const {
  if (u.size() != grid_.size()) fail(ErrorKind::InvalidArgument, "u has the wrong length");
  const std::size_t n = s_.size();
  DensityValue out;
  out.draws = n;
  if (!strictly_increasing_positive(u)) {
    out.log_value = kNegInf;
    return out;
  }

  const std::size_t L = u.size();
  std::vector<double> powered(L);  // u_l^(-1/xi)
  double log_u_terms = 0.0;
  for (std::size_t l = 0; l < L; ++l) {
    powered[l] = std::pow(u[l], -1.0 / xi_);
    log_u_terms += (-1.0 / xi_ - 1.0) * std::log(u[l]);
  }

  std::vector<double> log_terms(n);
  double peak = kNegInf;
  for (std::size_t j = 0; j < n; ++j) {
    double value = log_base_[j] + log_u_terms;
    double previous_v = v0_[j];
    for (std::size_t l = 0; l < L; ++l) {
      const double v = powered[l] * scale_[j];
      const double w = v - previous_v;
      if (!(w > 0.0)) {
        value = kNegInf;
        break;
      }
      value += (shapes_[l] - 1) * std::log(w) - w - log_gamma_shapes_[l];
      previous_v = v;
    }
    log_terms[j] = value;
    peak = std::max(peak, value);
  }
  if (peak == kNegInf) {
    out.log_value = kNegInf;
    return out;
  }

  double sum = 0.0;
  double sum_sq = 0.0;
  for (double lt : log_terms) {
    const double e = std::exp(lt - peak);
    sum += e;
    sum_sq += e * e;
  }
  const double count = static_cast<double>(n);
  const double mean = sum / count;
  out.log_value = peak + std::log(mean);
  out.value = std::exp(out.log_value);
  if (n > 1) {
    const double variance = std::max(0.0, (sum_sq - count * mean * mean) / (count - 1.0));
    out.mc_se = std::exp(peak) * std::sqrt(variance / count);
  }
  return out;
}

DensityPool density_pool(const HGrid& grid, double xi, std::size_t mc_draws, std::uint64_t seed) {
  grid.validate();
  if (mc_draws == 0) fail(ErrorKind::InvalidArgument, "mc_draws must be at least 1");
  RandomStream stream(seed, {stream_tag("density")});
  std::vector<double> s(mc_draws);
  std::vector<double> t(mc_draws);
  for (std::size_t j = 0; j < mc_draws; ++j) {
    s[j] = stream.gamma_int(grid.h0);
    t[j] = stream.gamma_int(grid.hm0 - grid.h0);
  }
  return DensityPool(grid, xi, std::move(s), std::move(t));
}

DensityValue joint_density(std::span<const double> u, const DensityPool& pool) {
  if (u.size() != pool.grid().size()) fail(ErrorKind::InvalidArgument, "u has the wrong length");
  for (std::size_t l = 0; l < u.size(); ++l) {
    if (!(u[l] > 0.0)) fail(ErrorKind::NonPositiveInput, "density support is u_l > 0");
    if (l > 0 && !(u[l] > u[l - 1])) fail(ErrorKind::InvalidOrdering, "u must be strictly increasing");
  }
  return pool.evaluate(u);
}

DensityValue joint_density(std::span<const double> u, double xi, const HGrid& grid, std::size_t mc_draws,
                           std::uint64_t seed) {
  return joint_density(u, density_pool(grid, xi, mc_draws, seed));
}

double log_joint_density(std::span<const double> u, const DensityPool& pool) {
  return pool.evaluate(u).log_value;
}

}  // namespace frontier
