#include "frontier/random.hpp"

#include <cmath>
#include <numbers>

namespace frontier {
namespace {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> path) noexcept {
  std::uint64_t h = splitmix64(seed);
  for (std::uint64_t key : path) h = splitmix64(h ^ splitmix64(key + 0x632be59bd9b4e019ULL));
  return h;
}

double RandomStream::exponential() { return -std::log(uniform_open_left()); }

double RandomStream::normal() {
  const double r = std::sqrt(-2.0 * std::log(uniform_open_left()));
  const double angle = 2.0 * std::numbers::pi * uniform();
  return r * std::cos(angle);
}

double RandomStream::gamma_int(int shape) {
  double total = 0.0;
  for (int i = 0; i < shape; ++i) total += exponential();
  return total;
}

__extension__ using uint128 = unsigned __int128;

std::uint64_t RandomStream::index(std::uint64_t n) {
  const uint128 product = static_cast<uint128>(engine_()) * n;
  return static_cast<std::uint64_t>(product >> 64);
}

}  // namespace frontier
