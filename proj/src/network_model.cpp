#include "uavcx/network_model.hpp"

#include <stdexcept>
#include <string>

namespace uavcx {

void RadioParams::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0))
      throw std::invalid_argument(std::string(name) + " must be > 0");
  };
  positive(p_tx, "p_tx");
  positive(g_t, "g_t");
  positive(g_r, "g_r");
  positive(g_ri, "g_ri");
  positive(g_p, "g_p");
  positive(f_c, "f_c");
  positive(sigma_bar, "sigma_bar");
  positive(r_target, "r_target");
  positive(alpha, "alpha");
  if (!(alpha_i > 2.0))
    throw std::invalid_argument("alpha_i must be > 2 (interference integral diverges otherwise)");
  if (n0 < 0.0) throw std::invalid_argument("n0 must be >= 0");
}

void DensityConfig::validate(const AccessScheme& scheme) const {
  if (!(lambda_d_raw >= 0.0) || !(lambda_r_raw >= 0.0))
    throw std::invalid_argument("node densities must be >= 0");
  if (!(r0 > 0.0)) throw std::invalid_argument("r0 must be > 0");
  if (!(delta > 0.0 && delta <= 1.0))
    throw std::invalid_argument("duty cycle must be in (0, 1]");
  if (is_soma(scheme)) {
    const double phi = std::get<Soma>(scheme).phi;
    if (!(phi >= 0.0 && phi <= 1.0))
      throw std::invalid_argument("phi must be in [0, 1]");
  } else {
    const double tau = std::get<Tdma>(scheme).tau;
    if (!(tau >= 0.0 && tau <= 1.0))
      throw std::invalid_argument("tau must be in [0, 1]");
    if (tau >= 1.0 || delta > (1.0 - tau) * (1.0 + 1e-12))
      throw std::invalid_argument(
          "TDMA active fraction delta/(1-tau) exceeds 1; lower tau or delta");
  }
}

double active_radar_density(const DensityConfig& dens, const AccessScheme& scheme) {
  if (is_soma(scheme)) return dens.delta * dens.lambda_r_raw;
  const double tau = std::get<Tdma>(scheme).tau;
  return dens.delta / (1.0 - tau) * dens.lambda_r_raw;
}

double effective_density(double lambda_bar, double r0) {
  const double disk = kPi * r0 * r0;
  // -expm1 keeps full precision in the sparse regime where the exponent is tiny
  return -std::expm1(-lambda_bar * disk) / disk;
}

EffectiveDensities effective_densities(const DensityConfig& dens, const AccessScheme& scheme) {
  dens.validate(scheme);
  EffectiveDensities out;
  out.lambda_r_active_raw = active_radar_density(dens, scheme);
  out.lambda_d = effective_density(dens.lambda_d_raw, dens.r0);
  out.lambda_r = effective_density(out.lambda_r_active_raw, dens.r0);
  return out;
}

double invert_effective_density(double lambda_eff, double r0) {
  if (!(r0 > 0.0)) throw std::domain_error("invert_effective_density: r0 must be > 0");
  if (lambda_eff < 0.0)
    throw std::domain_error("invert_effective_density: density must be >= 0");
  const double disk = kPi * r0 * r0;
  const double occupancy = lambda_eff * disk;
  if (occupancy >= 1.0)
    throw std::domain_error(
        "invert_effective_density: effective density reaches the hard-core "
        "packing bound 1/(pi r0^2) and has no finite preimage");
  return -std::log1p(-occupancy) / disk;
}

} // namespace uavcx
