#pragma once

#include <cstdint>

namespace uavcx {

/// xoshiro256++ stream. Seeding goes through splitmix64 so that nearby seeds
/// give unrelated state. Substreams are derived from (seed, index, tag):
/// every Monte Carlo trial owns its own stream, which is what makes results
/// independent of how trials are distributed over worker threads.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) { reseed(seed); }

  static RngStream substream(std::uint64_t seed, std::uint64_t index, std::uint64_t tag);

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

  /// Uniform double in [0, 1), 53-bit resolution.
  double next_u01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Exponential with the given mean, inverse CDF: -mean * ln(1 - U).
  double next_exponential(double mean) ;

  /// Poisson count with the given mean (inversion below 10, PTRS above).
  std::int64_t next_poisson(double mean);

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  void reseed(std::uint64_t seed);
  std::uint64_t state_[4];
};

} // namespace uavcx
