#include "uavcx/scenario_config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace uavcx {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& what) { throw ConfigError("config error: " + what); }

double require_number(const json& j, const std::string& key) {
  if (!j.at(key).is_number()) fail("key '" + key + "' must be a number");
  return j.at(key).get<double>();
}

void apply_number(const json& j, const char* key, double& target,
                  double (*convert)(double) = nullptr) {
  if (!j.contains(key)) return;
  const double v = require_number(j, key);
  target = convert ? convert(v) : v;
}

// 1-based line of a byte offset, for parse diagnostics
std::size_t line_of_offset(const std::string& text, std::size_t offset) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "p_tx_dbm",   "g_t_dbi",      "g_r_dbi",      "g_ri_dbi",    "g_p_dbi",
      "f_c_hz",     "alpha",        "alpha_i",      "sigma_bar_dbsm", "r_target_m",
      "h_uav_m",    "n0_w",         "duty_cycle",   "lambda_d_raw", "lambda_r_raw",
      "r0_m",       "scheme",       "gamma_th_db",  "beta_th_db",  "sim"};
  return keys;
}

} // namespace

ScenarioConfig ScenarioConfig::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("line " + std::to_string(line_of_offset(text, e.byte)) + ": " + e.what());
  }
  if (!j.is_object()) fail("top level must be a JSON object");

  for (const auto& item : j.items()) {
    if (!known_keys().contains(item.key())) fail("unknown key '" + item.key() + "'");
  }

  ScenarioConfig cfg;
  try {
    apply_number(j, "p_tx_dbm", cfg.params.p_tx, dbm_to_watts);
    apply_number(j, "g_t_dbi", cfg.params.g_t, db_to_linear);
    apply_number(j, "g_r_dbi", cfg.params.g_r, db_to_linear);
    apply_number(j, "g_ri_dbi", cfg.params.g_ri, db_to_linear);
    apply_number(j, "g_p_dbi", cfg.params.g_p, db_to_linear);
    apply_number(j, "f_c_hz", cfg.params.f_c);
    apply_number(j, "alpha", cfg.params.alpha);
    apply_number(j, "alpha_i", cfg.params.alpha_i);
    apply_number(j, "sigma_bar_dbsm", cfg.params.sigma_bar, dbsm_to_m2);
    apply_number(j, "r_target_m", cfg.params.r_target);
    apply_number(j, "h_uav_m", cfg.params.h_uav);
    apply_number(j, "n0_w", cfg.params.n0);
    apply_number(j, "duty_cycle", cfg.densities.delta);
    apply_number(j, "lambda_d_raw", cfg.densities.lambda_d_raw);
    apply_number(j, "lambda_r_raw", cfg.densities.lambda_r_raw);
    apply_number(j, "r0_m", cfg.densities.r0);
    apply_number(j, "gamma_th_db", cfg.gamma_th, db_to_linear);
    apply_number(j, "beta_th_db", cfg.beta_th, db_to_linear);

    if (j.contains("scheme")) {
      const json& s = j.at("scheme");
      if (!s.is_object() || s.size() != 1)
        fail("'scheme' must be {\"soma\": {\"phi\": x}} or {\"tdma\": {\"tau\": x}}");
      if (s.contains("soma")) {
        Soma soma;
        apply_number(s.at("soma"), "phi", soma.phi);
        cfg.scheme = soma;
      } else if (s.contains("tdma")) {
        Tdma tdma;
        apply_number(s.at("tdma"), "tau", tdma.tau);
        cfg.scheme = tdma;
      } else {
        fail("'scheme' must name either 'soma' or 'tdma'");
      }
    }

    if (j.contains("sim")) {
      const json& s = j.at("sim");
      if (!s.is_object()) fail("'sim' must be an object");
      for (const auto& item : s.items()) {
        static const std::set<std::string> sim_keys = {
            "trials", "r_max_m", "seed", "use_mhcpp", "include_noise", "threads"};
        if (!sim_keys.contains(item.key())) fail("unknown key 'sim." + item.key() + "'");
      }
      if (s.contains("trials")) cfg.sim.trials = s.at("trials").get<std::int64_t>();
      if (s.contains("r_max_m")) cfg.sim.r_max = require_number(s, "r_max_m");
      if (s.contains("seed")) cfg.sim.seed = s.at("seed").get<std::uint64_t>();
      if (s.contains("use_mhcpp")) cfg.sim.use_mhcpp = s.at("use_mhcpp").get<bool>();
      if (s.contains("include_noise")) cfg.sim.include_noise = s.at("include_noise").get<bool>();
      if (s.contains("threads")) cfg.sim.threads = s.at("threads").get<int>();
    }
  } catch (const json::exception& e) {
    fail(e.what());
  }

  cfg.validate();
  return cfg;
}

ScenarioConfig ScenarioConfig::from_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

ordered_json ScenarioConfig::to_json() const {
  ordered_json j;
  j["p_tx_dbm"] = linear_to_db(params.p_tx) + 30.0;
  j["g_t_dbi"] = linear_to_db(params.g_t);
  j["g_r_dbi"] = linear_to_db(params.g_r);
  j["g_ri_dbi"] = linear_to_db(params.g_ri);
  j["g_p_dbi"] = linear_to_db(params.g_p);
  j["f_c_hz"] = params.f_c;
  j["alpha"] = params.alpha;
  j["alpha_i"] = params.alpha_i;
  j["sigma_bar_dbsm"] = linear_to_db(params.sigma_bar);
  j["r_target_m"] = params.r_target;
  j["h_uav_m"] = params.h_uav;
  j["n0_w"] = params.n0;
  j["duty_cycle"] = densities.delta;
  j["lambda_d_raw"] = densities.lambda_d_raw;
  j["lambda_r_raw"] = densities.lambda_r_raw;
  j["r0_m"] = densities.r0;
  if (is_soma(scheme))
    j["scheme"] = {{"soma", {{"phi", std::get<Soma>(scheme).phi}}}};
  else
    j["scheme"] = {{"tdma", {{"tau", std::get<Tdma>(scheme).tau}}}};
  j["gamma_th_db"] = linear_to_db(gamma_th);
  j["beta_th_db"] = linear_to_db(beta_th);
  j["sim"] = {{"trials", sim.trials},
              {"r_max_m", sim.r_max},
              {"seed", sim.seed},
              {"use_mhcpp", sim.use_mhcpp},
              {"include_noise", sim.include_noise},
              {"threads", sim.threads}};
  return j;
}

MetricInputs ScenarioConfig::metric_inputs() const { return metric_inputs(scheme); }

MetricInputs ScenarioConfig::metric_inputs(const AccessScheme& override_scheme) const {
  return make_metric_inputs(params, override_scheme, densities, gamma_th, beta_th);
}

void ScenarioConfig::validate() const {
  try {
    params.validate();
    densities.validate(scheme);
    sim.validate(densities.r0);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  if (!(gamma_th > 0.0) || !(beta_th > 0.0)) fail("SINR thresholds must be > 0");
}

} // namespace uavcx
