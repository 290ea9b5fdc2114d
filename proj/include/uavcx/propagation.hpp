#pragma once

#include "uavcx/network_model.hpp"
#include "uavcx/rng.hpp"

namespace uavcx {

/// One realization of the random link state: Rayleigh power fading and a
/// Swerling-I radar cross-section (both exponential).
struct FadingDraw {
  double h = 0.0;     // small-scale fading power, mean 1
  double sigma = 0.0; // RCS realization, m^2, mean sigma_bar
};

/// Power of the radar echo for a given RCS realization:
/// fraction * p_tx * g_t * g_r * g_p * c^2 * sigma / ((4pi)^3 f_c^2 R0^{2 alpha}),
/// where fraction is 1-phi under SOMA and 1 under TDMA.
double radar_rx_power(const RadioParams& params, const AccessScheme& scheme, double sigma);

/// Power of the received data signal for a given fading draw:
/// fraction * p_tx * g_t * g_r * c^2 * h / ((4pi)^2 f_c^2 R0^{alpha}),
/// fraction phi under SOMA, 1 under TDMA.
double data_rx_power(const RadioParams& params, const AccessScheme& scheme, double h);

/// One interference summand: power_fraction * K1 * h * r^{-alpha_i}.
/// All interferer classes differ only in the power fraction (phi, 1-phi or 1).
double interferer_power(const RadioParams& params, double power_fraction, double r, double h);

/// Draw h ~ Exp(1) and sigma ~ Exp(sigma_bar). The caller owns the stream;
/// give each worker its own substream.
FadingDraw sample_fading(const RadioParams& params, RngStream& rng);

} // namespace uavcx
