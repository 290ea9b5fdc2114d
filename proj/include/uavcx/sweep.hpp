#pragma once

#include <span>
#include <string>
#include <vector>

#include "uavcx/scenario_config.hpp"

namespace uavcx {

enum class SweepVariable { kGammaThDb, kBetaThDb, kPhi, kTau, kLambdaDRaw, kLambdaRRaw, kR0M };
enum class Metric { kSrp, kOutage, kTc };

SweepVariable sweep_variable_from_name(const std::string& name);
std::string sweep_variable_name(SweepVariable v);
Metric metric_from_name(const std::string& name);
std::string metric_name(Metric m);

/// One-dimensional parameter sweep request.
struct SweepSpec {
  SweepVariable variable = SweepVariable::kGammaThDb;
  double start = -20.0;
  double stop = 0.0;
  int steps = 11; // >= 2
  std::vector<Metric> metrics = {Metric::kSrp};
  bool simulate = false;
};

/// Column-oriented sweep output. The first column is the sweep coordinate;
/// metric columns are named <metric>_<scheme> with an _r0_<value> suffix when
/// several guard radii are swept side by side. Simulated estimates add
/// <name>_sim and <name>_se columns. Rendering is deterministic: fixed number
/// formatting, rows in sweep order.
struct ResultTable {
  std::string meta;                      // resolved config + sweep, one JSON object
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows; // rows[point][column]

  /// CSV (RFC 4180) preceded by a '#'-prefixed header line carrying `meta`.
  std::string to_csv() const;
  /// One JSON object per row; the first line carries `meta`.
  std::string to_jsonl() const;
};

/// Evaluates the sweep for every (guard radius, scheme) combination.
/// Threshold sweeps reuse one simulation pass per combination across all
/// sweep points (the interference field does not depend on the threshold).
ResultTable run_sweep(const ScenarioConfig& base, const SweepSpec& spec,
                      std::span<const AccessScheme> schemes, std::span<const double> r0_list);

/// Named figure-reproduction presets. `ratio` only affects `fig5r`, where it
/// sets the active-radar to comm density ratio of the phi sweep.
ResultTable run_preset(const ScenarioConfig& base, const std::string& name, bool simulate,
                       double ratio = 1.0);
std::vector<std::string> preset_names();

/// The scenario a preset runs, exposed for the solver front end.
ScenarioConfig preset_scenario(const ScenarioConfig& base, const std::string& name,
                               double ratio = 1.0);

} // namespace uavcx
