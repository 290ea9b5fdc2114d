#pragma once

#include <cmath>
#include <variant>

namespace uavcx {

inline constexpr double kSpeedOfLight = 299792458.0; // m/s
inline constexpr double kPi = 3.141592653589793238462643383279502884;

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double dbsm_to_m2(double dbsm) { return std::pow(10.0, dbsm / 10.0); }
inline double linear_to_db(double v) { return 10.0 * std::log10(v); }

/// RF scenario constants, all in linear units (watts, linear gains, Hz, m).
/// Defaults reproduce the reference mmWave setup: 20 dBm transmit power,
/// 10 dBi antenna/processing gains, -10 dBi toward interference, 35 GHz,
/// 30 dBsm mean RCS, 50 m link distance.
struct RadioParams {
  double p_tx = 0.1;         // transmit power, W
  double g_t = 10.0;         // Tx antenna gain
  double g_r = 10.0;         // Rx antenna gain, desired link
  double g_ri = 0.1;         // Rx antenna gain toward interference
  double g_p = 10.0;         // radar processing gain
  double f_c = 35e9;         // carrier frequency, Hz
  double alpha = 2.0;        // desired-link path-loss exponent
  double alpha_i = 2.5;      // interference path-loss exponent, must be > 2
  double sigma_bar = 1000.0; // mean radar cross-section, m^2
  double r_target = 50.0;    // desired link distance R0, m
  double h_uav = 100.0;      // UAV altitude, m (metadata, unused in the formulas)
  double n0 = 0.0;           // noise power, W (simulator only)

  /// Composite interference link constant p_tx*g_t*g_ri*c^2/((4pi)^2 f_c^2).
  double k1() const {
    const double c2 = kSpeedOfLight * kSpeedOfLight;
    return p_tx * g_t * g_ri * c2 / ((4.0 * kPi) * (4.0 * kPi) * f_c * f_c);
  }

  /// Radar receiver effective aperture S_e = g_r c^2 / (4 pi f_c^2).
  double effective_aperture() const {
    const double c2 = kSpeedOfLight * kSpeedOfLight;
    return g_r * c2 / (4.0 * kPi * f_c * f_c);
  }

  /// Throws std::invalid_argument when a physical invariant is violated.
  void validate() const;
};

/// Spectrum overlay: radar and data share the band, transmit power split by phi.
struct Soma {
  double phi = 0.5; // fraction of transmit power given to the data signal
};

/// Time division: data gets a tau fraction of the slot, radar the rest.
struct Tdma {
  double tau = 0.5;
};

using AccessScheme = std::variant<Soma, Tdma>;

inline bool is_soma(const AccessScheme& s) { return std::holds_alternative<Soma>(s); }

/// Data-signal power fraction: phi under SOMA, 1 under TDMA.
inline double data_power_fraction(const AccessScheme& s) {
  return is_soma(s) ? std::get<Soma>(s).phi : 1.0;
}

/// Radar-signal power fraction: 1-phi under SOMA, 1 under TDMA.
inline double radar_power_fraction(const AccessScheme& s) {
  return is_soma(s) ? 1.0 - std::get<Soma>(s).phi : 1.0;
}

/// Raw deployment densities plus the guard-zone radius.
struct DensityConfig {
  double lambda_d_raw = 0.01; // UAV-comm density, nodes/m^2
  double lambda_r_raw = 0.1;  // UAV-radar density, nodes/m^2
  double delta = 0.1;         // radar duty cycle, (0, 1]
  double r0 = 5.0;            // guard-zone radius, m

  /// Throws std::invalid_argument on bad values; for TDMA also checks that
  /// the stretched duty cycle delta/(1-tau) stays <= 1.
  void validate(const AccessScheme& scheme) const;
};

/// Active radar density before hard-core thinning: delta * lambda_r' under
/// SOMA, delta/(1-tau) * lambda_r' under TDMA (radar airtime shrinks by tau,
/// so more radars must be active at once to keep the same coverage).
double active_radar_density(const DensityConfig& dens, const AccessScheme& scheme);

/// Densities after the Matern type-II -> HPPP approximation.
struct EffectiveDensities {
  double lambda_d = 0.0;            // effective UAV-comm density
  double lambda_r = 0.0;            // effective active UAV-radar density
  double lambda_r_active_raw = 0.0; // active radar density before thinning
};

/// Hard-core thinning map lambda = (1 - exp(-lam_bar pi r0^2)) / (pi r0^2)
/// applied to both populations. The comm side is scheme independent.
EffectiveDensities effective_densities(const DensityConfig& dens, const AccessScheme& scheme);

/// Single-population thinning map, exposed for solvers and tests.
double effective_density(double lambda_bar, double r0);

/// Algebraic inverse of the thinning map. Requires lambda_eff * pi * r0^2 < 1
/// (the map never reaches 1/(pi r0^2)); throws std::domain_error otherwise.
double invert_effective_density(double lambda_eff, double r0);

} // namespace uavcx
