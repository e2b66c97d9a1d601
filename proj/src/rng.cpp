#include "padeloc/rng.hpp"

#include <cmath>

namespace padeloc {

std::uint64_t substream_seed(std::uint64_t seed,
                             std::initializer_list<std::uint64_t> indices) noexcept {
  std::uint64_t h = mix64(seed);
  std::uint64_t k = 0;
  for (const auto index : indices) {
    h = mix64(h ^ mix64(index + ++k));
  }
  return h;
}

double Rng::uniform() noexcept {
  // (k + 0.5) / 2^53 never hits either endpoint.
  const std::uint64_t k = engine_() >> 11;
  return (static_cast<double>(k) + 0.5) * 0x1.0p-53;
}

double Rng::normal() noexcept {
  if (spare_normal_) {
    const double z = *spare_normal_;
    spare_normal_.reset();
    return z;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_normal_ = v * f;
  return u * f;
}

double Rng::exponential() noexcept { return -std::log(uniform()); }

}  // namespace padeloc
