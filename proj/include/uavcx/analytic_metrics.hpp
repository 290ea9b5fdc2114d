#pragma once

#include "uavcx/network_model.hpp"

namespace uavcx {

/// Everything the closed forms need. Thresholds are linear SINR values.
/// The closed forms hold in the interference-limited regime: params.n0 is
/// deliberately ignored by every function in this header.
struct MetricInputs {
  RadioParams params;
  AccessScheme scheme;
  EffectiveDensities eff;
  double r0 = 5.0;
  double gamma_th = 0.1;      // radar SINR threshold (SRP)
  double beta_th = 0.3162278; // data SINR threshold (outage / TC)
};

/// Builds MetricInputs, validating and deriving the effective densities.
MetricInputs make_metric_inputs(const RadioParams& params, const AccessScheme& scheme,
                                const DensityConfig& dens, double gamma_th, double beta_th);

/// Which receiver the aggregate interference lands on. Under SOMA both see
/// the same field; under TDMA the radar receiver sees only radars and the
/// data receiver only comms.
enum class Receiver { kRadar, kData };

/// Incomplete-beta bracket of one interferer class:
/// A(z) = B(2/a_i, 1-2/a_i) - B(1/(1 + z*fraction*K1*r0^{-a_i}); 2/a_i, 1-2/a_i).
/// Zero at z = 0 or fraction = 0, saturating at the complete beta.
double a_term(double z, double fraction, const RadioParams& params, double r0);

/// Laplace transform of the aggregate interference at z, in (0, 1].
double laplace_interference(double z, const MetricInputs& in, Receiver which);

/// Value plus a flag for the degenerate power splits (phi equal to 0 or 1),
/// where the returned number is the mathematical limit rather than an error
/// so parameter sweeps can cross the endpoints.
struct MetricValue {
  double value = 0.0;
  bool degenerate = false;
};

/// Successful ranging probability Pr(radar SINR > gamma_th).
/// SOMA with phi = 1 carries no radar power: returns {0, degenerate}.
MetricValue srp(const MetricInputs& in);

/// Outage probability Pr(data SINR < beta_th).
/// SOMA with phi = 0 carries no data power: returns {1, degenerate}.
MetricValue outage(const MetricInputs& in);

/// Transmission capacity in nats/(s*Hz*m^2):
/// lambda_d * ln(1+beta_th) * (1-outage), times tau under TDMA.
double transmission_capacity(const MetricInputs& in);

/// Same quantity evaluated through the expanded closed form (the exponential
/// written out with its incomplete-beta brackets). Used as an internal
/// consistency route; agrees with transmission_capacity to ~1e-15 relative.
double transmission_capacity_expanded(const MetricInputs& in);

/// SRP threshold rearranged to the Laplace argument:
/// z* = (4pi)^3 f_c^2 R0^{2 alpha} gamma / (fraction p_tx g_t g_r g_p c^2 sigma_bar).
double srp_laplace_argument(const MetricInputs& in);

/// Outage counterpart: z* = (4pi)^2 f_c^2 R0^{alpha} beta / (fraction p_tx g_t g_r c^2).
double outage_laplace_argument(const MetricInputs& in);

} // namespace uavcx
