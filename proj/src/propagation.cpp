#include "uavcx/propagation.hpp"

#include <cmath>
#include <stdexcept>

namespace uavcx {

double radar_rx_power(const RadioParams& params, const AccessScheme& scheme, double sigma) {
  const double c2 = kSpeedOfLight * kSpeedOfLight;
  const double four_pi = 4.0 * kPi;
  const double fraction = radar_power_fraction(scheme);
  return fraction * params.p_tx * params.g_t * params.g_r * params.g_p * c2 * sigma /
         (four_pi * four_pi * four_pi * params.f_c * params.f_c *
          std::pow(params.r_target, 2.0 * params.alpha));
}

double data_rx_power(const RadioParams& params, const AccessScheme& scheme, double h) {
  const double c2 = kSpeedOfLight * kSpeedOfLight;
  const double four_pi = 4.0 * kPi;
  const double fraction = data_power_fraction(scheme);
  return fraction * params.p_tx * params.g_t * params.g_r * c2 * h /
         (four_pi * four_pi * params.f_c * params.f_c *
          std::pow(params.r_target, params.alpha));
}

double interferer_power(const RadioParams& params, double power_fraction, double r, double h) {
  if (!(r > 0.0)) throw std::domain_error("interferer_power: r must be > 0");
  return power_fraction * params.k1() * h * std::pow(r, -params.alpha_i);
}

FadingDraw sample_fading(const RadioParams& params, RngStream& rng) {
  FadingDraw draw;
  draw.h = rng.next_exponential(1.0);
  draw.sigma = rng.next_exponential(params.sigma_bar);
  return draw;
}

} // namespace uavcx
