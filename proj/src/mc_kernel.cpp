#include "mc_kernel.hpp"

#include <cmath>

namespace uavcx::detail {

double field_sum(RngStream& rng, std::int64_t n, double t_lo, double t_span, double alpha_i) {
  constexpr int kChunk = 1024;
  alignas(64) double t[kChunk];
  alignas(64) double g[kChunk];
  const bool quarter_power = (alpha_i == 2.5); // t^{-1.25} = 1/(t * t^{1/4})
  const double neg_half_ai = -0.5 * alpha_i;
  double total = 0.0;
  while (n > 0) {
    const int m = n < kChunk ? static_cast<int>(n) : kChunk;
    for (int i = 0; i < m; ++i) {
      t[i] = t_lo + rng.next_u01() * t_span;
      g[i] = 1.0 - rng.next_u01();
    }
    double s = 0.0;
    if (quarter_power) {
#pragma omp simd reduction(+ : s)
      for (int i = 0; i < m; ++i) {
        const double p = t[i] * std::sqrt(std::sqrt(t[i]));
        s += -std::log(g[i]) / p;
      }
    } else {
#pragma omp simd reduction(+ : s)
      for (int i = 0; i < m; ++i) {
        s += -std::log(g[i]) * std::pow(t[i], neg_half_ai);
      }
    }
    total += s;
    n -= m;
  }
  return total;
}

} // namespace uavcx::detail
