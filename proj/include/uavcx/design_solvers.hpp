#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "uavcx/analytic_metrics.hpp"
#include "uavcx/network_model.hpp"

namespace uavcx {

/// Machine-readable record of one solved design question.
struct DesignReport {
  std::string quantity;
  std::vector<std::pair<std::string, double>> values; // name -> solved value
  double residual = 0.0;  // |forward(solution) - target| in the target's units
  int iterations = 0;     // 0 for closed-form solves
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

/// Largest effective densities meeting a target SRP under SOMA, with the
/// comm density tied to the radar density by lambda_d = ratio * lambda_r
/// (ratio 1 reproduces the equal-density special case; other ratios are the
/// natural generalization of the same linear constraint).
struct MaxDensityResult {
  double lambda_d = 0.0; // effective, nodes/m^2
  double lambda_r = 0.0; // effective, nodes/m^2
  double residual = 0.0; // |srp(solution) - target|
};
MaxDensityResult max_density_srp_soma(double target_srp, double gamma_th, double phi,
                                      const RadioParams& params, double r0, double ratio = 1.0);

/// TDMA counterpart: one closed-form division for the radar density.
struct MaxDensityTdmaResult {
  double lambda_r = 0.0; // effective, nodes/m^2
  double residual = 0.0;
};
MaxDensityTdmaResult max_density_srp_tdma(double target_srp, double gamma_th,
                                          const RadioParams& params, double r0);

/// Smallest guard radius reaching the target SRP at the given raw densities.
/// SRP grows with r0 both through the incomplete-beta brackets and through
/// the hard-core damping of the effective densities, so plain bisection is
/// reliable; effective densities are recomputed from the raw ones at every
/// candidate radius. Throws InfeasibleError when even r0 = 1e6 m falls short.
struct GuardRadiusResult {
  double r0 = 0.0;
  double residual = 0.0; // |srp(r0) - target|
  int iterations = 0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};
GuardRadiusResult min_guard_radius(const AccessScheme& scheme, double target_srp, double gamma_th,
                                   const DensityConfig& dens, const RadioParams& params);

/// TC-maximizing comm density lambda_d* = 1/(2 pi C3'); the same value for
/// SOMA and TDMA. The raw preimage is reported when the optimum lies inside
/// the range of the thinning map, otherwise raw_reachable is false.
struct OptimalCommDensity {
  double lambda_d_eff = 0.0;
  double lambda_d_raw = 0.0;
  bool raw_reachable = false;
};
OptimalCommDensity optimal_comm_density(double beta_th, const RadioParams& params, double r0,
                                        const AccessScheme& scheme);

/// Side-by-side SRP/TC for both schemes plus the case flags of the
/// analytical comparison. The flags encode proven statements that assume
/// phi = tau = 0.5; away from that operating point only the raw metric
/// quadruple is reported and the optionals stay empty.
struct SchemeComparison {
  double srp_soma = 0.0;
  double srp_tdma = 0.0;
  double tc_soma = 0.0;
  double tc_tdma = 0.0;
  double outage_soma = 0.0;
  double outage_tdma = 0.0;
  std::optional<bool> case1_holds;     // lambda_d' == active radar density
  std::optional<bool> case2_holds;     // lambda_d' <  active radar density
  std::optional<bool> prop5_condition; // Pr(beta_1 < beta_th) < 1/2
};
SchemeComparison compare_schemes(const RadioParams& params, const DensityConfig& dens, double phi,
                                 double tau, double gamma_th, double beta_th);

/// Thrown when a design target cannot be met (maps to CLI exit code 2).
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace uavcx
