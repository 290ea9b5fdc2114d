#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "uavcx/analytic_metrics.hpp"
#include "uavcx/monte_carlo.hpp"
#include "uavcx/network_model.hpp"

namespace uavcx {

/// Raised on malformed or invalid configuration input (CLI exit code 1).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A fully resolved scenario: RF constants, deployment densities, access
/// scheme, SINR thresholds and simulation controls. JSON keys use the
/// dB-suffixed spellings (`p_tx_dbm`, `g_t_dbi`, `sigma_bar_dbsm`, ...);
/// conversion to linear units happens once at parse time and everything
/// downstream computes in linear units. Missing keys keep the reference
/// defaults; unknown keys are rejected.
struct ScenarioConfig {
  RadioParams params;
  DensityConfig densities;
  AccessScheme scheme = Soma{0.5};
  double gamma_th = db_to_linear(-10.0); // radar SINR threshold, linear
  double beta_th = db_to_linear(-5.0);   // data SINR threshold, linear
  SimConfig sim;

  static ScenarioConfig from_json_text(const std::string& text);
  static ScenarioConfig from_json_file(const std::filesystem::path& path);

  /// Resolved configuration as JSON (dB spellings), suitable for embedding
  /// in output headers so artifacts are self-describing.
  nlohmann::ordered_json to_json() const;

  /// Metric inputs for this scenario, optionally overriding the scheme.
  MetricInputs metric_inputs() const;
  MetricInputs metric_inputs(const AccessScheme& override_scheme) const;

  void validate() const;
};

} // namespace uavcx
