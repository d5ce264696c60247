// Deterministic RNG: xoshiro256++ seeded through splitmix64. Bit-reproducible
// across platforms for a given seed.
#pragma once

#include <cstdint>

#include "pat/math.hpp"

namespace pat {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& s : state_) s = splitmix64(x);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in (0,1): 53-bit mantissa, never exactly 0 or 1.
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double normal() { return std_normal_quantile(uniform()); }

  // Truncated-normal draw by inverse transform on the truncated CDF.
  double truncnorm(double mu, double sigma, const Interval& support) {
    const double fa = std_normal_cdf((support.lo - mu) / sigma);
    const double fb = std_normal_cdf((support.hi - mu) / sigma);
    const double p = fa + uniform() * (fb - fa);
    return mu + sigma * std_normal_quantile(p);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  static std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_[4];
};

}  // namespace pat
