#include "uavcx/analytic_metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "uavcx/special_functions.hpp"

namespace uavcx {
namespace {

// B(a,b) - B(1/(1+q r0^{-a_i}); a, b) for the composite argument q = z*fraction*K1.
double c_term(double q, double r0, double alpha_i) {
  const double a = 2.0 / alpha_i;
  const double b = 1.0 - a;
  if (q <= 0.0) return 0.0;
  const double u0 = 1.0 / (1.0 + q * std::pow(r0, -alpha_i));
  return beta(a, b) - incomplete_beta(u0, a, b);
}

// 2 pi lambda A(q) q^{2/a_i} / a_i, the per-class exponent magnitude.
double class_exponent(double lambda, double q, double r0, double alpha_i) {
  if (lambda <= 0.0 || q <= 0.0) return 0.0;
  return 2.0 * kPi * lambda * c_term(q, r0, alpha_i) * std::pow(q, 2.0 / alpha_i) / alpha_i;
}

} // namespace

MetricInputs make_metric_inputs(const RadioParams& params, const AccessScheme& scheme,
                                const DensityConfig& dens, double gamma_th, double beta_th) {
  params.validate();
  if (!(gamma_th > 0.0) || !(beta_th > 0.0))
    throw std::invalid_argument("SINR thresholds must be > 0");
  MetricInputs in;
  in.params = params;
  in.scheme = scheme;
  in.eff = effective_densities(dens, scheme);
  in.r0 = dens.r0;
  in.gamma_th = gamma_th;
  in.beta_th = beta_th;
  return in;
}

double a_term(double z, double fraction, const RadioParams& params, double r0) {
  if (z < 0.0) throw std::domain_error("a_term: z must be >= 0");
  return c_term(z * fraction * params.k1(), r0, params.alpha_i);
}

double laplace_interference(double z, const MetricInputs& in, Receiver which) {
  if (z < 0.0) throw std::domain_error("laplace_interference: z must be >= 0");
  const RadioParams& p = in.params;
  const double k1 = p.k1();
  double expo = 0.0;
  if (is_soma(in.scheme)) {
    // radar and data receivers share the field: comms at fraction phi,
    // active radars at fraction 1-phi
    const double phi = std::get<Soma>(in.scheme).phi;
    expo = class_exponent(in.eff.lambda_d, z * phi * k1, in.r0, p.alpha_i) +
           class_exponent(in.eff.lambda_r, z * (1.0 - phi) * k1, in.r0, p.alpha_i);
  } else if (which == Receiver::kRadar) {
    expo = class_exponent(in.eff.lambda_r, z * k1, in.r0, p.alpha_i);
  } else {
    expo = class_exponent(in.eff.lambda_d, z * k1, in.r0, p.alpha_i);
  }
  return std::exp(-expo);
}

double srp_laplace_argument(const MetricInputs& in) {
  const RadioParams& p = in.params;
  const double four_pi = 4.0 * kPi;
  const double c2 = kSpeedOfLight * kSpeedOfLight;
  const double fraction = radar_power_fraction(in.scheme);
  return four_pi * four_pi * four_pi * p.f_c * p.f_c *
         std::pow(p.r_target, 2.0 * p.alpha) * in.gamma_th /
         (fraction * p.p_tx * p.g_t * p.g_r * p.g_p * c2 * p.sigma_bar);
}

double outage_laplace_argument(const MetricInputs& in) {
  const RadioParams& p = in.params;
  const double four_pi = 4.0 * kPi;
  const double c2 = kSpeedOfLight * kSpeedOfLight;
  const double fraction = data_power_fraction(in.scheme);
  return four_pi * four_pi * p.f_c * p.f_c * std::pow(p.r_target, p.alpha) * in.beta_th /
         (fraction * p.p_tx * p.g_t * p.g_r * c2);
}

MetricValue srp(const MetricInputs& in) {
  if (is_soma(in.scheme) && std::get<Soma>(in.scheme).phi >= 1.0) {
    // no power left on the radar signal
    return {0.0, true};
  }
  return {laplace_interference(srp_laplace_argument(in), in, Receiver::kRadar), false};
}

MetricValue outage(const MetricInputs& in) {
  if (is_soma(in.scheme) && std::get<Soma>(in.scheme).phi <= 0.0) {
    // no power left on the data signal
    return {1.0, true};
  }
  return {1.0 - laplace_interference(outage_laplace_argument(in), in, Receiver::kData), false};
}

double transmission_capacity(const MetricInputs& in) {
  const double prefactor = is_soma(in.scheme) ? 1.0 : std::get<Tdma>(in.scheme).tau;
  return prefactor * in.eff.lambda_d * std::log1p(in.beta_th) * (1.0 - outage(in).value);
}

double transmission_capacity_expanded(const MetricInputs& in) {
  const RadioParams& p = in.params;
  const double ai = p.alpha_i;
  const double pq = p.g_ri * std::pow(p.r_target, p.alpha) * in.beta_th / p.g_r;
  const double rate = std::log1p(in.beta_th);
  if (is_soma(in.scheme)) {
    const double phi = std::get<Soma>(in.scheme).phi;
    if (phi <= 0.0) return 0.0;
    const double ratio = (1.0 - phi) / phi;
    const double c3 = c_term(pq, in.r0, ai);
    const double c4 = c_term(ratio * pq, in.r0, ai);
    const double expo = 2.0 * kPi *
                        (in.eff.lambda_d * c3 + std::pow(ratio, 2.0 / ai) * in.eff.lambda_r * c4) *
                        std::pow(pq, 2.0 / ai) / ai;
    return in.eff.lambda_d * rate * std::exp(-expo);
  }
  const double tau = std::get<Tdma>(in.scheme).tau;
  const double expo =
      2.0 * kPi * in.eff.lambda_d * c_term(pq, in.r0, ai) * std::pow(pq, 2.0 / ai) / ai;
  return tau * in.eff.lambda_d * rate * std::exp(-expo);
}

} // namespace uavcx
