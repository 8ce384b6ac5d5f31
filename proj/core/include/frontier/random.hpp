#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace frontier {

/// 64-bit tag for a named substream, e.g. stream_tag("density").
constexpr std::uint64_t stream_tag(std::string_view name) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Deterministically mixes a seed with a path of keys (replication index,
/// draw index, tag...). Distinct paths give statistically independent seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> path) noexcept;

/// A reproducible random stream. The variate transforms are written out here
/// rather than taken from <random> distributions, whose algorithms differ
/// between standard library implementations.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}
  RandomStream(std::uint64_t seed, std::initializer_list<std::uint64_t> path)
      : engine_(derive_seed(seed, path)) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1].
  double uniform_open_left() { return 1.0 - uniform(); }

  double exponential();

  /// Standard normal via Box-Muller; consumes two uniforms per call.
  double normal();

  /// Gamma(shape, 1) for integer shape as a sum of exponentials.
  double gamma_int(int shape);

  /// Uniform integer on [0, n).
  std::uint64_t index(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace frontier
