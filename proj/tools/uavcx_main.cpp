// Command line front end: closed-form evaluation, figure sweeps, Monte Carlo
// cross-checks and the design solvers. Exit codes: 0 success, 1 configuration
// error, 2 infeasible design target, 3 internal numeric failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uavcx/design_solvers.hpp"
#include "uavcx/monte_carlo.hpp"
#include "uavcx/scenario_config.hpp"
#include "uavcx/sweep.hpp"

namespace {

using nlohmann::ordered_json;
using namespace uavcx;

struct CommonOptions {
  std::string config_path;
  std::optional<double> gamma_th_db, gamma_th_linear;
  std::optional<double> beta_th_db, beta_th_linear;
  std::optional<double> phi, tau, lambda_d, lambda_r, r0;
  std::optional<std::int64_t> trials;
  std::optional<double> r_max;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  bool use_mhcpp = false;
  bool include_noise = false;
};

void add_common_options(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--config", opt.config_path, "scenario JSON file (defaults otherwise)");
  cmd->add_option("--gamma-th-db", opt.gamma_th_db, "radar SINR threshold, dB");
  cmd->add_option("--gamma-th", opt.gamma_th_linear, "radar SINR threshold, linear");
  cmd->add_option("--beta-th-db", opt.beta_th_db, "data SINR threshold, dB");
  cmd->add_option("--beta-th", opt.beta_th_linear, "data SINR threshold, linear");
  cmd->add_option("--phi", opt.phi, "SOMA power splitting factor")->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--tau", opt.tau, "TDMA time division factor")->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--lambda-d", opt.lambda_d, "raw UAV-comm density, nodes/m^2");
  cmd->add_option("--lambda-r", opt.lambda_r, "raw UAV-radar density, nodes/m^2");
  cmd->add_option("--r0", opt.r0, "guard-zone radius, m");
  cmd->add_option("--trials", opt.trials, "Monte Carlo trials");
  cmd->add_option("--r-max", opt.r_max, "interference truncation radius, m");
  cmd->add_option("--seed", opt.seed, "Monte Carlo seed");
  cmd->add_option("--threads", opt.threads, "worker threads (0 = auto)");
  cmd->add_flag("--use-mhcpp", opt.use_mhcpp, "sample true Matern fields instead of HPPP");
  cmd->add_flag("--include-noise", opt.include_noise, "add n0 to simulated SINR denominators");
}

ScenarioConfig resolve_config(const CommonOptions& opt) {
  ScenarioConfig cfg = opt.config_path.empty()
                           ? ScenarioConfig::from_json_text("{}")
                           : ScenarioConfig::from_json_file(opt.config_path);
  if (opt.gamma_th_db && opt.gamma_th_linear)
    throw ConfigError("give --gamma-th-db or --gamma-th, not both");
  if (opt.beta_th_db && opt.beta_th_linear)
    throw ConfigError("give --beta-th-db or --beta-th, not both");
  if (opt.gamma_th_db) cfg.gamma_th = db_to_linear(*opt.gamma_th_db);
  if (opt.gamma_th_linear) cfg.gamma_th = *opt.gamma_th_linear;
  if (opt.beta_th_db) cfg.beta_th = db_to_linear(*opt.beta_th_db);
  if (opt.beta_th_linear) cfg.beta_th = *opt.beta_th_linear;
  if (opt.phi) cfg.scheme = Soma{*opt.phi};
  if (opt.tau) cfg.scheme = Tdma{*opt.tau};
  if (opt.phi && opt.tau)
    throw ConfigError("--phi and --tau select different schemes; give one");
  if (opt.lambda_d) cfg.densities.lambda_d_raw = *opt.lambda_d;
  if (opt.lambda_r) cfg.densities.lambda_r_raw = *opt.lambda_r;
  if (opt.r0) cfg.densities.r0 = *opt.r0;
  if (opt.trials) cfg.sim.trials = *opt.trials;
  if (opt.r_max) cfg.sim.r_max = *opt.r_max;
  if (opt.seed) cfg.sim.seed = *opt.seed;
  if (opt.threads) cfg.sim.threads = *opt.threads;
  if (opt.use_mhcpp) cfg.sim.use_mhcpp = true;
  if (opt.include_noise) cfg.sim.include_noise = true;
  cfg.validate();
  if (cfg.params.n0 > 0.0)
    std::cerr << "uavcx: warning: n0 > 0 is ignored by the closed forms "
                 "(interference-limited regime); it only enters simulation with "
                 "--include-noise\n";
  return cfg;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << text;
}

std::vector<Metric> parse_metrics(const std::string& list) {
  std::vector<Metric> metrics;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const std::size_t comma = list.find(',', pos);
    const std::string item = list.substr(pos, comma - pos);
    if (item == "all") return {Metric::kSrp, Metric::kOutage, Metric::kTc};
    metrics.push_back(metric_from_name(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return metrics;
}

std::vector<AccessScheme> parse_schemes(const std::string& list, const ScenarioConfig& cfg) {
  const double phi = is_soma(cfg.scheme) ? std::get<Soma>(cfg.scheme).phi : 0.5;
  const double tau = is_soma(cfg.scheme) ? 0.5 : std::get<Tdma>(cfg.scheme).tau;
  if (list == "soma") return {Soma{phi}};
  if (list == "tdma") return {Tdma{tau}};
  if (list == "both") return {Soma{phi}, Tdma{tau}};
  throw ConfigError("unknown scheme '" + list + "' (soma, tdma or both)");
}

// single-point evaluation: one JSON record per metric and scheme
int run_single_eval(const ScenarioConfig& cfg, const std::vector<Metric>& metrics,
                    const std::vector<AccessScheme>& schemes, bool simulate,
                    const std::string& format, const std::string& out_path) {
  std::vector<ordered_json> records;
  for (const AccessScheme& scheme : schemes) {
    const MetricInputs in = cfg.metric_inputs(scheme);
    std::optional<SrpOutageSweep> sim;
    if (simulate) {
      const double g[1] = {cfg.gamma_th};
      const double b[1] = {cfg.beta_th};
      const bool need_srp =
          std::find(metrics.begin(), metrics.end(), Metric::kSrp) != metrics.end();
      const bool need_out = std::find(metrics.begin(), metrics.end(), Metric::kSrp) ==
                                metrics.end() ||
                            metrics.size() > 1;
      sim = simulate_metrics_sweep(in, need_srp ? std::span<const double>(g)
                                                : std::span<const double>{},
                                   need_out ? std::span<const double>(b)
                                            : std::span<const double>{},
                                   cfg.sim);
    }
    for (Metric m : metrics) {
      ordered_json rec;
      rec["metric"] = metric_name(m);
      rec["scheme"] = is_soma(scheme) ? "soma" : "tdma";
      switch (m) {
        case Metric::kSrp: {
          const MetricValue v = srp(in);
          rec["gamma_th_db"] = linear_to_db(cfg.gamma_th);
          rec["analytic"] = v.value;
          if (v.degenerate) rec["degenerate"] = true;
          if (sim) {
            rec["simulated"] = sim->srp[0].mean;
            rec["std_err"] = sim->srp[0].std_err;
          }
          break;
        }
        case Metric::kOutage: {
          const MetricValue v = outage(in);
          rec["beta_th_db"] = linear_to_db(cfg.beta_th);
          rec["analytic"] = v.value;
          if (v.degenerate) rec["degenerate"] = true;
          if (sim) {
            rec["simulated"] = sim->outage[0].mean;
            rec["std_err"] = sim->outage[0].std_err;
          }
          break;
        }
        case Metric::kTc: {
          rec["beta_th_db"] = linear_to_db(cfg.beta_th);
          rec["analytic"] = transmission_capacity(in);
          if (sim) {
            const double duration = is_soma(scheme) ? 1.0 : std::get<Tdma>(scheme).tau;
            const double prefactor = duration * in.eff.lambda_d * std::log1p(cfg.beta_th);
            rec["simulated"] = prefactor * (1.0 - sim->outage[0].mean);
            rec["std_err"] = prefactor * sim->outage[0].std_err;
          }
          break;
        }
      }
      records.push_back(std::move(rec));
    }
  }

  std::string text;
  if (format == "jsonl") {
    for (const auto& r : records) text += r.dump() + "\n";
  } else if (format == "json" || format.empty()) {
    if (records.size() == 1) {
      text = records[0].dump(2) + "\n";
    } else {
      ordered_json arr = ordered_json::array();
      for (auto& r : records) arr.push_back(std::move(r));
      text = arr.dump(2) + "\n";
    }
  } else if (format == "csv") {
    text = "metric,scheme,analytic,simulated,std_err\n";
    for (const auto& r : records) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "%s,%s,%.12g,%s,%s\n",
                    r.at("metric").get<std::string>().c_str(),
                    r.at("scheme").get<std::string>().c_str(), r.at("analytic").get<double>(),
                    r.contains("simulated")
                        ? std::to_string(r.at("simulated").get<double>()).c_str()
                        : "",
                    r.contains("std_err") ? std::to_string(r.at("std_err").get<double>()).c_str()
                                          : "");
      text += buf;
    }
  } else {
    throw ConfigError("unknown format '" + format + "'");
  }
  write_output(text, out_path);
  return 0;
}

ordered_json report_to_json(const DesignReport& report) {
  ordered_json j;
  j["quantity"] = report.quantity;
  ordered_json vals;
  for (const auto& [name, value] : report.values)
    vals[name] = std::isfinite(value) ? ordered_json(value) : ordered_json(nullptr);
  j["values"] = vals;
  j["residual"] = report.residual;
  j["iterations"] = report.iterations;
  j["bracket"] = {report.bracket_lo, report.bracket_hi};
  return j;
}

int run_solver(const ScenarioConfig& cfg, const std::string& name, double target_srp,
               double ratio, const std::string& out_path) {
  DesignReport report;
  report.quantity = name;
  const RadioParams& p = cfg.params;
  const double r0 = cfg.densities.r0;

  if (name == "max-density-soma") {
    const double phi = is_soma(cfg.scheme) ? std::get<Soma>(cfg.scheme).phi : 0.5;
    const MaxDensityResult r = max_density_srp_soma(target_srp, cfg.gamma_th, phi, p, r0, ratio);
    report.values = {{"lambda_d_eff", r.lambda_d}, {"lambda_r_eff", r.lambda_r}};
    try {
      report.values.emplace_back("lambda_d_raw", invert_effective_density(r.lambda_d, r0));
      const double active = invert_effective_density(r.lambda_r, r0);
      report.values.emplace_back("lambda_r_raw", active / cfg.densities.delta);
    } catch (const std::domain_error&) {
      report.values.emplace_back("lambda_raw_unreachable", 1.0);
    }
    report.residual = r.residual;
  } else if (name == "max-density-tdma") {
    const MaxDensityTdmaResult r = max_density_srp_tdma(target_srp, cfg.gamma_th, p, r0);
    report.values = {{"lambda_r_eff", r.lambda_r}};
    const double tau = is_soma(cfg.scheme) ? 0.5 : std::get<Tdma>(cfg.scheme).tau;
    try {
      const double active = invert_effective_density(r.lambda_r, r0);
      report.values.emplace_back("lambda_r_raw", active * (1.0 - tau) / cfg.densities.delta);
    } catch (const std::domain_error&) {
      report.values.emplace_back("lambda_raw_unreachable", 1.0);
    }
    report.residual = r.residual;
  } else if (name == "min-guard-radius") {
    const GuardRadiusResult r =
        min_guard_radius(cfg.scheme, target_srp, cfg.gamma_th, cfg.densities, p);
    report.values = {{"r0_m", r.r0}};
    report.residual = r.residual;
    report.iterations = r.iterations;
    report.bracket_lo = r.bracket_lo;
    report.bracket_hi = r.bracket_hi;
  } else if (name == "optimal-comm-density") {
    const OptimalCommDensity r = optimal_comm_density(cfg.beta_th, p, r0, cfg.scheme);
    report.values = {{"lambda_d_eff", r.lambda_d_eff}, {"lambda_d_raw", r.lambda_d_raw}};
    if (!r.raw_reachable) report.values.emplace_back("lambda_raw_unreachable", 1.0);
  } else if (name == "compare") {
    const double phi = is_soma(cfg.scheme) ? std::get<Soma>(cfg.scheme).phi : 0.5;
    const double tau = is_soma(cfg.scheme) ? 0.5 : std::get<Tdma>(cfg.scheme).tau;
    const SchemeComparison cmp =
        compare_schemes(p, cfg.densities, phi, tau, cfg.gamma_th, cfg.beta_th);
    ordered_json j;
    j["quantity"] = "compare";
    j["srp_soma"] = cmp.srp_soma;
    j["srp_tdma"] = cmp.srp_tdma;
    j["outage_soma"] = cmp.outage_soma;
    j["outage_tdma"] = cmp.outage_tdma;
    j["tc_soma"] = cmp.tc_soma;
    j["tc_tdma"] = cmp.tc_tdma;
    j["case1_holds"] = cmp.case1_holds ? ordered_json(*cmp.case1_holds) : ordered_json(nullptr);
    j["case2_holds"] = cmp.case2_holds ? ordered_json(*cmp.case2_holds) : ordered_json(nullptr);
    j["prop5_condition"] =
        cmp.prop5_condition ? ordered_json(*cmp.prop5_condition) : ordered_json(nullptr);
    write_output(j.dump(2) + "\n", out_path);
    return 0;
  } else {
    throw ConfigError("unknown solver '" + name + "'");
  }
  write_output(report_to_json(report).dump(2) + "\n", out_path);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"closed-form and Monte Carlo evaluation of coexisting UAV radar "
               "and communication networks"};
  app.require_subcommand(1);

  // ---- eval: single evaluations and parameter sweeps ----
  CommonOptions eval_opt;
  std::string preset, var_name, metrics_list = "all", schemes_list = "both";
  std::string format, out_path;
  double var_start = 0.0, var_stop = 0.0, ratio = 1.0;
  int var_steps = 0;
  bool simulate = false;

  CLI::App* eval = app.add_subcommand("eval", "evaluate metrics at a point or over a sweep");
  add_common_options(eval, eval_opt);
  eval->add_option("--preset", preset,
                   "figure preset: " + [] {
                     std::string names;
                     for (const auto& n : preset_names()) names += n + " ";
                     return names;
                   }());
  eval->add_option("--var", var_name, "sweep variable (gamma_th_db, beta_th_db, phi, tau, "
                                      "lambda_d_raw, lambda_r_raw, r0_m)");
  eval->add_option("--start", var_start, "sweep start");
  eval->add_option("--stop", var_stop, "sweep stop");
  eval->add_option("--steps", var_steps, "sweep points (>= 2)");
  eval->add_option("--metrics,--metric", metrics_list, "srp, outage, tc or all");
  eval->add_option("--scheme,--schemes", schemes_list, "soma, tdma or both");
  eval->add_flag("--simulate", simulate, "add Monte Carlo estimates");
  eval->add_option("--ratio", ratio, "active-radar to comm density ratio (fig5r preset)");
  eval->add_option("--format", format, "csv, json or jsonl");
  eval->add_option("-o,--output", out_path, "output file (stdout otherwise)");

  // ---- solve: design solvers ----
  CommonOptions solve_opt;
  std::string solver_name, solve_preset, solve_out;
  double target_srp = 0.9, solve_ratio = 1.0;
  CLI::App* solve = app.add_subcommand("solve", "network design solvers");
  add_common_options(solve, solve_opt);
  solve->add_option("solver", solver_name,
                    "max-density-soma, max-density-tdma, min-guard-radius, "
                    "optimal-comm-density or compare")
      ->required();
  solve->add_option("--preset", solve_preset, "run against a figure preset scenario");
  solve->add_option("--target-srp", target_srp, "target ranging probability");
  solve->add_option("--ratio", solve_ratio, "comm to radar effective density ratio");
  solve->add_option("-o,--output", solve_out, "output file (stdout otherwise)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (eval->parsed()) {
      ScenarioConfig cfg = resolve_config(eval_opt);
      if (!preset.empty() && !var_name.empty())
        throw ConfigError("--preset and --var are mutually exclusive");
      if (!preset.empty()) {
        const ResultTable table = run_preset(cfg, preset, simulate, ratio);
        write_output(format == "jsonl" ? table.to_jsonl() : table.to_csv(), out_path);
        return 0;
      }
      if (!var_name.empty()) {
        SweepSpec spec;
        spec.variable = sweep_variable_from_name(var_name);
        spec.start = var_start;
        spec.stop = var_stop;
        spec.steps = var_steps;
        spec.metrics = parse_metrics(metrics_list);
        spec.simulate = simulate;
        const std::vector<AccessScheme> schemes = parse_schemes(schemes_list, cfg);
        const ResultTable table = run_sweep(cfg, spec, schemes, {});
        write_output(format == "jsonl" ? table.to_jsonl() : table.to_csv(), out_path);
        return 0;
      }
      return run_single_eval(cfg, parse_metrics(metrics_list), parse_schemes(schemes_list, cfg),
                             simulate, format, out_path);
    }

    // solve
    ScenarioConfig cfg = resolve_config(solve_opt);
    if (!solve_preset.empty()) cfg = preset_scenario(cfg, solve_preset, solve_ratio);
    return run_solver(cfg, solver_name, target_srp, solve_ratio, solve_out);
  } catch (const ConfigError& e) {
    std::cerr << "uavcx: " << e.what() << "\n";
    return 1;
  } catch (const InfeasibleError& e) {
    std::cerr << "uavcx: infeasible: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "uavcx: numeric failure: " << e.what() << "\n";
    return 3;
  }
}
