#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>

namespace padeloc {

/// splitmix64 output function (Steele, Lea, Flood 2014). Bijective on 64 bits
/// with full avalanche.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed of the substream addressed by `indices` under `seed`:
///   h0 = mix64(seed), h_{k+1} = mix64(h_k ^ mix64(index_k + k + 1)).
/// Distinct index tuples give statistically independent streams; the result
/// depends only on the values, never on thread scheduling.
std::uint64_t substream_seed(std::uint64_t seed,
                             std::initializer_list<std::uint64_t> indices) noexcept;

/// Portable random stream. The engine is std::mt19937_64, whose output
/// sequence is fixed by the C++ standard; the variate transforms below are
/// implemented here (not via <random> distributions) so a given seed yields
/// the same variates with every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform() noexcept;
  /// Uniform on (lo, hi).
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
  /// Standard normal (Marsaglia polar method).
  double normal() noexcept;
  /// Exponential with unit mean.
  double exponential() noexcept;

  std::uint64_t next_u64() noexcept { return engine_(); }

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_normal_;
};

}  // namespace padeloc
