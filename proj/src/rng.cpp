#include "uavcx/rng.hpp"

#include <cmath>

#include "uavcx/special_functions.hpp"

namespace uavcx {
namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

} // namespace

void RngStream::reseed(std::uint64_t seed) {
  std::uint64_t x = seed;
  for (auto& w : state_) w = splitmix64(x);
}

RngStream RngStream::substream(std::uint64_t seed, std::uint64_t index, std::uint64_t tag) {
  std::uint64_t x = seed;
  std::uint64_t mixed = splitmix64(x);
  x = mixed ^ index;
  mixed = splitmix64(x);
  x = mixed ^ tag;
  return RngStream(splitmix64(x));
}

double RngStream::next_exponential(double mean) {
  return -mean * std::log1p(-next_u01());
}

std::int64_t RngStream::next_poisson(double mean) {
  if (mean <= 0.0) return 0;
  if (mean < 10.0) {
    // multiplication method
    const double limit = std::exp(-mean);
    std::int64_t k = 0;
    double prod = next_u01();
    while (prod > limit) {
      ++k;
      prod *= next_u01();
    }
    return k;
  }
  // PTRS transformed rejection (Hormann 1993); exact for mean >= 10.
  const double slam = std::sqrt(mean);
  const double loglam = std::log(mean);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    const double u = next_u01() - 0.5;
    const double v = next_u01();
    const double us = 0.5 - std::fabs(u);
    const double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<std::int64_t>(k);
    if (k < 0.0 || (us < 0.013 && v > us)) continue;
    const double lhs = std::log(v * inv_alpha / (a / (us * us) + b));
    const double rhs = -mean + k * loglam - log_gamma(k + 1.0);
    if (lhs <= rhs) return static_cast<std::int64_t>(k);
  }
}

} // namespace uavcx
