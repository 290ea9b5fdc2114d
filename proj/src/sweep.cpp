#include "uavcx/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "uavcx/monte_carlo.hpp"

namespace uavcx {
namespace {

using nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    v[static_cast<std::size_t>(i)] = a + (b - a) * static_cast<double>(i) / (n - 1);
  return v;
}

void apply_variable(ScenarioConfig& cfg, AccessScheme& scheme, SweepVariable var, double v) {
  switch (var) {
    case SweepVariable::kGammaThDb: cfg.gamma_th = db_to_linear(v); break;
    case SweepVariable::kBetaThDb: cfg.beta_th = db_to_linear(v); break;
    case SweepVariable::kPhi:
      if (is_soma(scheme)) scheme = Soma{v};
      break;
    case SweepVariable::kTau:
      if (!is_soma(scheme)) scheme = Tdma{v};
      break;
    case SweepVariable::kLambdaDRaw: cfg.densities.lambda_d_raw = v; break;
    case SweepVariable::kLambdaRRaw: cfg.densities.lambda_r_raw = v; break;
    case SweepVariable::kR0M: cfg.densities.r0 = v; break;
  }
}

std::string scheme_suffix(const AccessScheme& s) { return is_soma(s) ? "soma" : "tdma"; }

double tc_prefactor(const MetricInputs& in) {
  const double duration = is_soma(in.scheme) ? 1.0 : std::get<Tdma>(in.scheme).tau;
  return duration * in.eff.lambda_d * std::log1p(in.beta_th);
}

ResultTable run_sweep_impl(const ScenarioConfig& base, const SweepSpec& spec,
                           std::span<const AccessScheme> schemes, std::span<const double> r0_list,
                           ordered_json extra_meta) {
  if (spec.steps < 2) throw ConfigError("sweep needs at least 2 steps");
  if (!(spec.start < spec.stop)) throw ConfigError("sweep start must be below stop");
  if (spec.metrics.empty()) throw ConfigError("sweep needs at least one metric");
  if (schemes.empty()) throw ConfigError("sweep needs at least one scheme");

  const std::vector<double> coords = linspace(spec.start, spec.stop, spec.steps);
  std::vector<double> radii(r0_list.begin(), r0_list.end());
  const bool suffix_r0 = radii.size() > 1;
  if (radii.empty()) radii.push_back(base.densities.r0);

  ResultTable table;
  table.columns.push_back(sweep_variable_name(spec.variable));
  table.rows.assign(coords.size(), {});
  for (std::size_t p = 0; p < coords.size(); ++p) table.rows[p].push_back(coords[p]);

  const bool need_srp_sim =
      spec.simulate && std::find(spec.metrics.begin(), spec.metrics.end(), Metric::kSrp) !=
                           spec.metrics.end();
  const bool need_outage_sim =
      spec.simulate && (std::find(spec.metrics.begin(), spec.metrics.end(), Metric::kOutage) !=
                            spec.metrics.end() ||
                        std::find(spec.metrics.begin(), spec.metrics.end(), Metric::kTc) !=
                            spec.metrics.end());

  for (double r0 : radii) {
    for (const AccessScheme& scheme0 : schemes) {
      ScenarioConfig group_cfg = base;
      group_cfg.densities.r0 = r0;

      // per-point scenario and analytic inputs
      std::vector<ScenarioConfig> cfgs;
      std::vector<AccessScheme> schms;
      std::vector<MetricInputs> inputs;
      cfgs.reserve(coords.size());
      for (double v : coords) {
        ScenarioConfig c = group_cfg;
        AccessScheme s = scheme0;
        apply_variable(c, s, spec.variable, v);
        inputs.push_back(c.metric_inputs(s));
        cfgs.push_back(std::move(c));
        schms.push_back(s);
      }

      // simulation passes: threshold sweeps reuse one field pass, every other
      // variable reshapes the field and needs per-point passes
      std::vector<SimEstimate> srp_sim(coords.size());
      std::vector<SimEstimate> out_sim(coords.size());
      if (spec.simulate) {
        if (spec.variable == SweepVariable::kGammaThDb) {
          std::vector<double> gammas;
          for (double v : coords) gammas.push_back(db_to_linear(v));
          if (need_srp_sim)
            srp_sim = simulate_metrics_sweep(inputs[0], gammas, {}, group_cfg.sim).srp;
          if (need_outage_sim) {
            const double beta[1] = {group_cfg.beta_th};
            const SimEstimate e =
                simulate_metrics_sweep(inputs[0], {}, beta, group_cfg.sim).outage[0];
            std::fill(out_sim.begin(), out_sim.end(), e);
          }
        } else if (spec.variable == SweepVariable::kBetaThDb) {
          std::vector<double> betas;
          for (double v : coords) betas.push_back(db_to_linear(v));
          if (need_outage_sim)
            out_sim = simulate_metrics_sweep(inputs[0], {}, betas, group_cfg.sim).outage;
          if (need_srp_sim) {
            const double gamma[1] = {group_cfg.gamma_th};
            const SimEstimate e =
                simulate_metrics_sweep(inputs[0], gamma, {}, group_cfg.sim).srp[0];
            std::fill(srp_sim.begin(), srp_sim.end(), e);
          }
        } else {
          for (std::size_t p = 0; p < coords.size(); ++p) {
            const double gamma[1] = {cfgs[p].gamma_th};
            const double beta[1] = {cfgs[p].beta_th};
            const SrpOutageSweep r = simulate_metrics_sweep(
                inputs[p], need_srp_sim ? std::span<const double>(gamma) : std::span<const double>{},
                need_outage_sim ? std::span<const double>(beta) : std::span<const double>{},
                cfgs[p].sim);
            if (need_srp_sim) srp_sim[p] = r.srp[0];
            if (need_outage_sim) out_sim[p] = r.outage[0];
          }
        }
      }

      for (Metric m : spec.metrics) {
        std::string name = metric_name(m) + "_" + scheme_suffix(scheme0);
        if (suffix_r0) name += "_r0_" + fmt(r0);
        table.columns.push_back(name);
        if (spec.simulate) {
          table.columns.push_back(name + "_sim");
          table.columns.push_back(name + "_se");
        }
        for (std::size_t p = 0; p < coords.size(); ++p) {
          double analytic = 0.0;
          double sim_value = 0.0;
          double sim_se = 0.0;
          switch (m) {
            case Metric::kSrp:
              analytic = srp(inputs[p]).value;
              sim_value = srp_sim[p].mean;
              sim_se = srp_sim[p].std_err;
              break;
            case Metric::kOutage:
              analytic = outage(inputs[p]).value;
              sim_value = out_sim[p].mean;
              sim_se = out_sim[p].std_err;
              break;
            case Metric::kTc: {
              analytic = transmission_capacity(inputs[p]);
              const double pref = tc_prefactor(inputs[p]);
              sim_value = pref * (1.0 - out_sim[p].mean);
              sim_se = pref * out_sim[p].std_err;
              break;
            }
          }
          table.rows[p].push_back(analytic);
          if (spec.simulate) {
            table.rows[p].push_back(sim_value);
            table.rows[p].push_back(sim_se);
          }
        }
      }
    }
  }

  ordered_json meta;
  meta["config"] = base.to_json();
  ordered_json sweep_meta;
  sweep_meta["variable"] = sweep_variable_name(spec.variable);
  sweep_meta["start"] = spec.start;
  sweep_meta["stop"] = spec.stop;
  sweep_meta["steps"] = spec.steps;
  sweep_meta["simulate"] = spec.simulate;
  std::vector<std::string> metric_names;
  for (Metric m : spec.metrics) metric_names.push_back(metric_name(m));
  sweep_meta["metrics"] = metric_names;
  meta["sweep"] = sweep_meta;
  ordered_json scheme_list = ordered_json::array();
  for (const AccessScheme& s : schemes) {
    if (is_soma(s))
      scheme_list.push_back({{"soma", {{"phi", std::get<Soma>(s).phi}}}});
    else
      scheme_list.push_back({{"tdma", {{"tau", std::get<Tdma>(s).tau}}}});
  }
  meta["schemes"] = scheme_list;
  meta["r0_list"] = radii;
  for (const auto& item : extra_meta.items()) meta[item.key()] = item.value();
  table.meta = meta.dump();
  return table;
}

} // namespace

SweepVariable sweep_variable_from_name(const std::string& name) {
  if (name == "gamma_th_db") return SweepVariable::kGammaThDb;
  if (name == "beta_th_db") return SweepVariable::kBetaThDb;
  if (name == "phi") return SweepVariable::kPhi;
  if (name == "tau") return SweepVariable::kTau;
  if (name == "lambda_d_raw") return SweepVariable::kLambdaDRaw;
  if (name == "lambda_r_raw") return SweepVariable::kLambdaRRaw;
  if (name == "r0_m") return SweepVariable::kR0M;
  throw ConfigError("unknown sweep variable '" + name + "'");
}

std::string sweep_variable_name(SweepVariable v) {
  switch (v) {
    case SweepVariable::kGammaThDb: return "gamma_th_db";
    case SweepVariable::kBetaThDb: return "beta_th_db";
    case SweepVariable::kPhi: return "phi";
    case SweepVariable::kTau: return "tau";
    case SweepVariable::kLambdaDRaw: return "lambda_d_raw";
    case SweepVariable::kLambdaRRaw: return "lambda_r_raw";
    case SweepVariable::kR0M: return "r0_m";
  }
  return "?";
}

Metric metric_from_name(const std::string& name) {
  if (name == "srp") return Metric::kSrp;
  if (name == "outage") return Metric::kOutage;
  if (name == "tc") return Metric::kTc;
  throw ConfigError("unknown metric '" + name + "'");
}

std::string metric_name(Metric m) {
  switch (m) {
    case Metric::kSrp: return "srp";
    case Metric::kOutage: return "outage";
    case Metric::kTc: return "tc_nats";
  }
  return "?";
}

std::string ResultTable::to_csv() const {
  std::string out = "# " + meta + "\n";
  for (std::size_t c = 0; c < columns.size(); ++c) {
    out += columns[c];
    out += (c + 1 < columns.size()) ? ',' : '\n';
  }
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += fmt(row[c]);
      out += (c + 1 < row.size()) ? ',' : '\n';
    }
  }
  return out;
}

std::string ResultTable::to_jsonl() const {
  std::string out = meta + "\n";
  for (const auto& row : rows) {
    ordered_json j;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (std::isfinite(row[c]))
        j[columns[c]] = row[c];
      else
        j[columns[c]] = nullptr;
    }
    out += j.dump();
    out += '\n';
  }
  return out;
}

ResultTable run_sweep(const ScenarioConfig& base, const SweepSpec& spec,
                      std::span<const AccessScheme> schemes, std::span<const double> r0_list) {
  return run_sweep_impl(base, spec, schemes, r0_list, ordered_json::object());
}

namespace {

struct PresetDef {
  SweepSpec spec;
  std::vector<AccessScheme> schemes;
  std::vector<double> r0_list;
};

// caption parameters of the reproduced figures, applied over the user config
ScenarioConfig preset_config(const ScenarioConfig& base, const std::string& name, double ratio) {
  ScenarioConfig cfg = base;
  cfg.densities.delta = 0.1;
  if (name == "fig3a" || name == "fig3b" || name == "fig5a" || name == "fig5b") {
    cfg.densities.lambda_d_raw = 0.01;
    cfg.densities.lambda_r_raw = 0.1;
    cfg.densities.r0 = 5.0;
    cfg.gamma_th = db_to_linear(-10.0);
    cfg.beta_th = db_to_linear(-5.0);
  } else if (name == "fig4a" || name == "fig4b") {
    cfg.densities.lambda_d_raw = 0.00025;
    cfg.densities.lambda_r_raw = 0.005;
    cfg.densities.r0 = 5.0;
  } else if (name == "fig5r") {
    cfg.densities.lambda_d_raw = 0.01;
    // ratio fixes the active-radar density at ratio * lambda_d'
    cfg.densities.lambda_r_raw = ratio * 0.01 / cfg.densities.delta;
    cfg.densities.r0 = 5.0;
    cfg.gamma_th = db_to_linear(-10.0);
  } else if (name == "fig6") {
    cfg.densities.lambda_d_raw = 0.01;
    cfg.densities.lambda_r_raw = 0.01;
    cfg.densities.r0 = 5.0;
    cfg.gamma_th = db_to_linear(-10.0);
    cfg.beta_th = db_to_linear(0.0);
  } else if (name == "fig7") {
    cfg.densities.lambda_d_raw = 0.01;
    cfg.densities.lambda_r_raw = 0.01;
    cfg.densities.r0 = 5.0;
    cfg.gamma_th = db_to_linear(-10.0);
    cfg.beta_th = db_to_linear(0.0);
  } else {
    throw ConfigError("unknown preset '" + name + "'");
  }
  return cfg;
}

PresetDef preset_def(const std::string& name) {
  PresetDef d;
  const std::vector<AccessScheme> both = {Soma{0.5}, Tdma{0.5}};
  if (name == "fig3a") {
    d.spec = {SweepVariable::kGammaThDb, -20.0, 0.0, 11, {Metric::kSrp}, false};
    d.schemes = both;
    d.r0_list = {5.0, 15.0, 25.0};
  } else if (name == "fig3b") {
    d.spec = {SweepVariable::kBetaThDb, -10.0, 10.0, 11, {Metric::kOutage, Metric::kTc}, false};
    d.schemes = both;
    d.r0_list = {5.0, 15.0, 25.0};
  } else if (name == "fig4a") {
    d.spec = {SweepVariable::kGammaThDb, -20.0, 0.0, 11, {Metric::kSrp}, false};
    d.schemes = both;
  } else if (name == "fig4b") {
    d.spec = {SweepVariable::kBetaThDb, -10.0, 10.0, 11, {Metric::kOutage, Metric::kTc}, false};
    d.schemes = both;
  } else if (name == "fig5a") {
    d.spec = {SweepVariable::kPhi, 0.0, 1.0, 51, {Metric::kSrp, Metric::kTc}, false};
    d.schemes = {Soma{0.5}};
  } else if (name == "fig5b") {
    // tau caps at 1 - delta, past that the stretched duty cycle exceeds 1
    d.spec = {SweepVariable::kTau, 0.0, 0.9, 46, {Metric::kSrp, Metric::kTc}, false};
    d.schemes = {Tdma{0.5}};
  } else if (name == "fig5r") {
    d.spec = {SweepVariable::kPhi, 0.02, 0.98, 49, {Metric::kSrp}, false};
    d.schemes = {Soma{0.5}};
  } else if (name == "fig6") {
    d.spec = {SweepVariable::kLambdaDRaw, 0.0005, 0.04, 80, {Metric::kSrp, Metric::kTc}, false};
    d.schemes = both;
  } else if (name == "fig7") {
    d.spec = {SweepVariable::kLambdaRRaw, 0.002, 0.2, 100, {Metric::kSrp, Metric::kTc}, false};
    d.schemes = both;
  } else {
    throw ConfigError("unknown preset '" + name + "'");
  }
  return d;
}

} // namespace

std::vector<std::string> preset_names() {
  return {"fig3a", "fig3b", "fig4a", "fig4b", "fig5a", "fig5b", "fig5r", "fig6", "fig7"};
}

ScenarioConfig preset_scenario(const ScenarioConfig& base, const std::string& name, double ratio) {
  return preset_config(base, name, ratio);
}

ResultTable run_preset(const ScenarioConfig& base, const std::string& name, bool simulate,
                       double ratio) {
  PresetDef def = preset_def(name);
  def.spec.simulate = simulate;
  ordered_json extra;
  extra["preset"] = name;
  if (name == "fig5r") extra["ratio"] = ratio;
  return run_sweep_impl(preset_config(base, name, ratio), def.spec, def.schemes, def.r0_list,
                        std::move(extra));
}

} // namespace uavcx
