#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "uavcx/analytic_metrics.hpp"
#include "uavcx/network_model.hpp"
#include "uavcx/rng.hpp"

namespace uavcx {

/// Simulation controls. Trials are mapped to counter-based substreams of the
/// seed, so estimates do not depend on the number of worker threads.
struct SimConfig {
  std::int64_t trials = 100000;
  double r_max = 5000.0;     // interference truncation radius, m
  std::uint64_t seed = 42;
  bool use_mhcpp = false;    // sample true Matern type-II instead of effective-density HPPP
  bool include_noise = false;
  int threads = 0;           // worker threads, 0 = hardware concurrency

  void validate(double r0) const; // throws std::invalid_argument
};

struct SimEstimate {
  double mean = 0.0;
  double std_err = 0.0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
};

/// Planar points relative to the typical receiver.
struct PlanarPoint {
  double r = 0.0;     // m
  double theta = 0.0; // radians
};
using PointSet = std::vector<PlanarPoint>;

/// HPPP on the annulus (r0, r_max]: Poisson count with mean
/// lambda*pi*(r_max^2-r0^2), area-uniform radii, uniform angles.
PointSet sample_hppp_annulus(double lambda, double r0, double r_max, RngStream& rng);

/// Matern hard-core type-II sample: parent HPPP on the square of half-width
/// window_half + r0 (margin avoids edge bias), independent uniform marks, a
/// point survives iff no parent within r0 holds a smaller mark. Returns the
/// survivors inside the inner window, as (r, theta) about the center.
PointSet sample_mhcpp_type2(double lambda_parent, double r0, double window_half, RngStream& rng);

/// Estimates of SRP over gamma_list and outage over beta_list sharing one
/// field pass per trial. Under SOMA the two metrics see the same interference
/// realization (radar echo and data link coexist in the slot); under TDMA the
/// SRP part samples the radar field and the outage part the comm field.
struct SrpOutageSweep {
  std::vector<SimEstimate> srp;
  std::vector<SimEstimate> outage;
};
SrpOutageSweep simulate_metrics_sweep(const MetricInputs& in, std::span<const double> gamma_list,
                                      std::span<const double> beta_list, const SimConfig& sim);

/// Pr(radar SINR > gamma_th) by Monte Carlo; std_err = sqrt(p(1-p)/trials).
SimEstimate simulate_srp(const MetricInputs& in, const SimConfig& sim);

/// Pr(data SINR < beta_th) by Monte Carlo.
SimEstimate simulate_outage(const MetricInputs& in, const SimConfig& sim);

/// Empirical Laplace functional E[exp(-z I)] of the selected interference
/// field. Validates the analytic transform; under SOMA the two receivers
/// return bit-identical estimates at equal seeds (shared field).
SimEstimate simulate_laplace(const MetricInputs& in, Receiver which, double z,
                             const SimConfig& sim);

/// Average retained density over independent Matern type-II windows.
/// window_half <= 0 picks 10*r0.
double empirical_retention(double lambda_parent, double r0, std::int64_t windows,
                           std::uint64_t seed, double window_half = -1.0);

/// Mean interference neglected beyond r_max relative to the in-range mean,
/// for the field the given receiver sees: tail/range with
/// tail = 2 pi sum_c lambda_c f_c K1 r_max^{2-a_i}/(a_i-2). The closed forms
/// integrate to infinity, so this ratio bounds the simulation bias; the
/// simulator warns when it exceeds 1%.
double truncation_bias_ratio(const MetricInputs& in, Receiver which, const SimConfig& sim);

} // namespace uavcx
