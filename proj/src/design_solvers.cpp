#include "uavcx/design_solvers.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "uavcx/special_functions.hpp"

namespace uavcx {
namespace {

// composite SRP threshold argument Q = 4 pi g_ri R0^{2 alpha} gamma / (g_r g_p sigma_bar)
double srp_argument(double gamma_th, const RadioParams& p) {
  return 4.0 * kPi * p.g_ri * std::pow(p.r_target, 2.0 * p.alpha) * gamma_th /
         (p.g_r * p.g_p * p.sigma_bar);
}

// composite outage threshold argument P = g_ri R0^alpha beta / g_r
double outage_argument(double beta_th, const RadioParams& p) {
  return p.g_ri * std::pow(p.r_target, p.alpha) * beta_th / p.g_r;
}

double c_term(double q, double r0, double alpha_i) {
  const double a = 2.0 / alpha_i;
  const double b = 1.0 - a;
  if (q <= 0.0) return 0.0;
  const double u0 = 1.0 / (1.0 + q * std::pow(r0, -alpha_i));
  return beta(a, b) - incomplete_beta(u0, a, b);
}

double c3_prime(double beta_th, const RadioParams& p, double r0) {
  const double pq = outage_argument(beta_th, p);
  return c_term(pq, r0, p.alpha_i) * std::pow(pq, 2.0 / p.alpha_i) / p.alpha_i;
}

MetricInputs inputs_from_effective(const RadioParams& params, const AccessScheme& scheme,
                                   const EffectiveDensities& eff, double r0, double gamma_th,
                                   double beta_th) {
  MetricInputs in;
  in.params = params;
  in.scheme = scheme;
  in.eff = eff;
  in.r0 = r0;
  in.gamma_th = gamma_th;
  in.beta_th = beta_th;
  return in;
}

void check_target(double target_srp) {
  if (!(target_srp > 0.0 && target_srp <= 1.0))
    throw std::invalid_argument("target SRP must lie in (0, 1]");
}

} // namespace

MaxDensityResult max_density_srp_soma(double target_srp, double gamma_th, double phi,
                                      const RadioParams& params, double r0, double ratio) {
  params.validate();
  check_target(target_srp);
  if (!(ratio > 0.0)) throw std::invalid_argument("density ratio must be > 0");
  if (phi >= 1.0)
    throw InfeasibleError("phi = 1 leaves no radar power, SRP is identically 0");

  const double ai = params.alpha_i;
  const double q = srp_argument(gamma_th, params);
  const double rhs = -std::log(target_srp) * ai / (2.0 * kPi * std::pow(q, 2.0 / ai));
  const double odds = phi / (1.0 - phi);
  const double c1 = c_term(odds * q, r0, ai);
  const double c2 = c_term(q, r0, ai);
  const double denom = std::pow(odds, 2.0 / ai) * ratio * c1 + c2;

  MaxDensityResult out;
  out.lambda_r = rhs / denom;
  out.lambda_d = ratio * out.lambda_r;

  EffectiveDensities eff{out.lambda_d, out.lambda_r, 0.0};
  const MetricInputs in =
      inputs_from_effective(params, Soma{phi}, eff, r0, gamma_th, 1.0);
  out.residual = std::fabs(srp(in).value - target_srp);
  return out;
}

MaxDensityTdmaResult max_density_srp_tdma(double target_srp, double gamma_th,
                                          const RadioParams& params, double r0) {
  params.validate();
  check_target(target_srp);
  const double ai = params.alpha_i;
  const double q = srp_argument(gamma_th, params);
  MaxDensityTdmaResult out;
  out.lambda_r =
      -std::log(target_srp) * ai / (2.0 * kPi * std::pow(q, 2.0 / ai) * c_term(q, r0, ai));

  EffectiveDensities eff{0.0, out.lambda_r, 0.0};
  const MetricInputs in =
      inputs_from_effective(params, Tdma{0.5}, eff, r0, gamma_th, 1.0);
  out.residual = std::fabs(srp(in).value - target_srp);
  return out;
}

GuardRadiusResult min_guard_radius(const AccessScheme& scheme, double target_srp, double gamma_th,
                                   const DensityConfig& dens, const RadioParams& params) {
  params.validate();
  check_target(target_srp);
  constexpr double kFloor = 1e-6;  // m
  constexpr double kCeiling = 1e6; // m
  constexpr double kWidthTol = 1e-7;
  constexpr int kMaxIter = 200;

  auto srp_at = [&](double r0) {
    DensityConfig d = dens;
    d.r0 = r0;
    const MetricInputs in =
        inputs_from_effective(params, scheme, effective_densities(d, scheme), r0, gamma_th, 1.0);
    return srp(in).value;
  };

  GuardRadiusResult out;
  out.bracket_lo = kFloor;
  if (srp_at(kFloor) >= target_srp) {
    // any radius works, the constraint does not bind
    out.r0 = kFloor;
    out.bracket_hi = kFloor;
    out.residual = std::fabs(srp_at(kFloor) - target_srp);
    return out;
  }

  double lo = kFloor; // fails the target, established above
  double hi = 1.0;
  while (srp_at(hi) < target_srp) {
    lo = hi;
    hi *= 2.0;
    if (hi > kCeiling)
      throw InfeasibleError("target SRP unreachable even with a 1e6 m guard zone");
  }
  out.bracket_lo = lo;
  out.bracket_hi = hi;

  int iter = 0;
  while (hi - lo > kWidthTol && iter < kMaxIter) {
    const double mid = 0.5 * (lo + hi);
    if (srp_at(mid) < target_srp)
      lo = mid;
    else
      hi = mid;
    ++iter;
  }
  out.r0 = hi; // smallest radius known to reach the target
  out.iterations = iter;
  out.residual = std::fabs(srp_at(hi) - target_srp);
  return out;
}

OptimalCommDensity optimal_comm_density(double beta_th, const RadioParams& params, double r0,
                                        const AccessScheme& scheme) {
  params.validate();
  if (!(beta_th > 0.0)) throw std::invalid_argument("beta_th must be > 0");
  (void)scheme; // the optimum is scheme independent; kept for interface symmetry
  OptimalCommDensity out;
  out.lambda_d_eff = 1.0 / (2.0 * kPi * c3_prime(beta_th, params, r0));
  if (out.lambda_d_eff * kPi * r0 * r0 < 1.0) {
    out.lambda_d_raw = invert_effective_density(out.lambda_d_eff, r0);
    out.raw_reachable = true;
  } else {
    out.lambda_d_raw = std::numeric_limits<double>::quiet_NaN();
    out.raw_reachable = false;
  }
  return out;
}

SchemeComparison compare_schemes(const RadioParams& params, const DensityConfig& dens, double phi,
                                 double tau, double gamma_th, double beta_th) {
  const AccessScheme soma = Soma{phi};
  const AccessScheme tdma = Tdma{tau};
  const MetricInputs in_soma =
      make_metric_inputs(params, soma, dens, gamma_th, beta_th);
  const MetricInputs in_tdma =
      make_metric_inputs(params, tdma, dens, gamma_th, beta_th);

  SchemeComparison cmp;
  cmp.srp_soma = srp(in_soma).value;
  cmp.srp_tdma = srp(in_tdma).value;
  cmp.outage_soma = outage(in_soma).value;
  cmp.outage_tdma = outage(in_tdma).value;
  cmp.tc_soma = transmission_capacity(in_soma);
  cmp.tc_tdma = transmission_capacity(in_tdma);

  // the case propositions are proven for the symmetric resource split only
  if (std::fabs(phi - 0.5) < 1e-12 && std::fabs(tau - 0.5) < 1e-12) {
    const double active = active_radar_density(dens, soma);
    const double scale = std::max({dens.lambda_d_raw, active, 1e-300});
    cmp.case1_holds = std::fabs(dens.lambda_d_raw - active) <= 1e-9 * scale;
    cmp.case2_holds = !*cmp.case1_holds && dens.lambda_d_raw < active;
    cmp.prop5_condition =
        -std::expm1(-2.0 * kPi * in_soma.eff.lambda_r * c3_prime(beta_th, params, dens.r0)) < 0.5;
  }
  return cmp;
}

} // namespace uavcx
