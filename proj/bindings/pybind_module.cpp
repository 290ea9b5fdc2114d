// Python module: the closed-form metrics, the Monte Carlo estimators and the
// design solvers, mirroring the C++ surface one to one.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <span>
#include <vector>

#include "uavcx/design_solvers.hpp"
#include "uavcx/monte_carlo.hpp"
#include "uavcx/propagation.hpp"
#include "uavcx/scenario_config.hpp"
#include "uavcx/special_functions.hpp"
#include "uavcx/sweep.hpp"

namespace py = pybind11;
using namespace uavcx;

PYBIND11_MODULE(uavcx, m) {
  m.doc() = "Coexisting UAV radar/communication networks: closed-form SRP and "
            "transmission-capacity metrics, stochastic-geometry Monte Carlo "
            "cross-validation and network design solvers.";

  py::register_exception<InfeasibleError>(m, "InfeasibleError");
  py::register_exception<ConfigError>(m, "ConfigError");

  // special functions
  m.def("log_gamma", &log_gamma, py::arg("x"));
  m.def("beta", &beta, py::arg("a"), py::arg("b"));
  m.def("incomplete_beta", &incomplete_beta, py::arg("x"), py::arg("a"), py::arg("b"));

  // network model
  py::class_<RadioParams>(m, "RadioParams")
      .def(py::init<>())
      .def_readwrite("p_tx", &RadioParams::p_tx)
      .def_readwrite("g_t", &RadioParams::g_t)
      .def_readwrite("g_r", &RadioParams::g_r)
      .def_readwrite("g_ri", &RadioParams::g_ri)
      .def_readwrite("g_p", &RadioParams::g_p)
      .def_readwrite("f_c", &RadioParams::f_c)
      .def_readwrite("alpha", &RadioParams::alpha)
      .def_readwrite("alpha_i", &RadioParams::alpha_i)
      .def_readwrite("sigma_bar", &RadioParams::sigma_bar)
      .def_readwrite("r_target", &RadioParams::r_target)
      .def_readwrite("h_uav", &RadioParams::h_uav)
      .def_readwrite("n0", &RadioParams::n0)
      .def("k1", &RadioParams::k1)
      .def("effective_aperture", &RadioParams::effective_aperture)
      .def("validate", &RadioParams::validate);

  py::class_<Soma>(m, "Soma").def(py::init<double>(), py::arg("phi") = 0.5)
      .def_readwrite("phi", &Soma::phi);
  py::class_<Tdma>(m, "Tdma").def(py::init<double>(), py::arg("tau") = 0.5)
      .def_readwrite("tau", &Tdma::tau);

  py::class_<DensityConfig>(m, "DensityConfig")
      .def(py::init<>())
      .def_readwrite("lambda_d_raw", &DensityConfig::lambda_d_raw)
      .def_readwrite("lambda_r_raw", &DensityConfig::lambda_r_raw)
      .def_readwrite("delta", &DensityConfig::delta)
      .def_readwrite("r0", &DensityConfig::r0);

  py::class_<EffectiveDensities>(m, "EffectiveDensities")
      .def(py::init<>())
      .def_readwrite("lambda_d", &EffectiveDensities::lambda_d)
      .def_readwrite("lambda_r", &EffectiveDensities::lambda_r)
      .def_readwrite("lambda_r_active_raw", &EffectiveDensities::lambda_r_active_raw);

  m.def("db_to_linear", &db_to_linear);
  m.def("dbm_to_watts", &dbm_to_watts);
  m.def("dbsm_to_m2", &dbsm_to_m2);
  m.def("linear_to_db", &linear_to_db);
  m.def("effective_density", &effective_density, py::arg("lambda_bar"), py::arg("r0"));
  m.def("effective_densities", &effective_densities, py::arg("densities"), py::arg("scheme"));
  m.def("invert_effective_density", &invert_effective_density, py::arg("lambda_eff"),
        py::arg("r0"));
  m.def("active_radar_density", &active_radar_density, py::arg("densities"), py::arg("scheme"));

  // propagation
  py::class_<RngStream>(m, "RngStream")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def_static("substream", &RngStream::substream, py::arg("seed"), py::arg("index"),
                  py::arg("tag"))
      .def("next_u64", &RngStream::next_u64)
      .def("next_u01", &RngStream::next_u01)
      .def("next_exponential", &RngStream::next_exponential, py::arg("mean"))
      .def("next_poisson", &RngStream::next_poisson, py::arg("mean"));

  py::class_<FadingDraw>(m, "FadingDraw")
      .def_readonly("h", &FadingDraw::h)
      .def_readonly("sigma", &FadingDraw::sigma);

  m.def("radar_rx_power", &radar_rx_power, py::arg("params"), py::arg("scheme"), py::arg("sigma"));
  m.def("data_rx_power", &data_rx_power, py::arg("params"), py::arg("scheme"), py::arg("h"));
  m.def("interferer_power", &interferer_power, py::arg("params"), py::arg("power_fraction"),
        py::arg("r"), py::arg("h"));
  m.def("sample_fading", &sample_fading, py::arg("params"), py::arg("rng"));

  // analytic metrics
  py::enum_<Receiver>(m, "Receiver")
      .value("RADAR", Receiver::kRadar)
      .value("DATA", Receiver::kData);

  py::class_<MetricInputs>(m, "MetricInputs")
      .def(py::init<>())
      .def_readwrite("params", &MetricInputs::params)
      .def_readwrite("scheme", &MetricInputs::scheme)
      .def_readwrite("eff", &MetricInputs::eff)
      .def_readwrite("r0", &MetricInputs::r0)
      .def_readwrite("gamma_th", &MetricInputs::gamma_th)
      .def_readwrite("beta_th", &MetricInputs::beta_th);

  py::class_<MetricValue>(m, "MetricValue")
      .def_readonly("value", &MetricValue::value)
      .def_readonly("degenerate", &MetricValue::degenerate)
      .def("__float__", [](const MetricValue& v) { return v.value; })
      .def("__repr__", [](const MetricValue& v) {
        return "MetricValue(value=" + std::to_string(v.value) +
               (v.degenerate ? ", degenerate=True)" : ")");
      });

  m.def("make_metric_inputs", &make_metric_inputs, py::arg("params"), py::arg("scheme"),
        py::arg("densities"), py::arg("gamma_th"), py::arg("beta_th"));
  m.def("a_term", &a_term, py::arg("z"), py::arg("fraction"), py::arg("params"), py::arg("r0"));
  m.def("laplace_interference", &laplace_interference, py::arg("z"), py::arg("inputs"),
        py::arg("receiver"));
  m.def("srp", &srp, py::arg("inputs"));
  m.def("outage", &outage, py::arg("inputs"));
  m.def("transmission_capacity", &transmission_capacity, py::arg("inputs"));
  m.def("transmission_capacity_expanded", &transmission_capacity_expanded, py::arg("inputs"));
  m.def("srp_laplace_argument", &srp_laplace_argument, py::arg("inputs"));
  m.def("outage_laplace_argument", &outage_laplace_argument, py::arg("inputs"));

  // monte carlo
  py::class_<SimConfig>(m, "SimConfig")
      .def(py::init<>())
      .def_readwrite("trials", &SimConfig::trials)
      .def_readwrite("r_max", &SimConfig::r_max)
      .def_readwrite("seed", &SimConfig::seed)
      .def_readwrite("use_mhcpp", &SimConfig::use_mhcpp)
      .def_readwrite("include_noise", &SimConfig::include_noise)
      .def_readwrite("threads", &SimConfig::threads);

  py::class_<SimEstimate>(m, "SimEstimate")
      .def_readonly("mean", &SimEstimate::mean)
      .def_readonly("std_err", &SimEstimate::std_err)
      .def_readonly("trials", &SimEstimate::trials)
      .def_readonly("seed", &SimEstimate::seed)
      .def("__repr__", [](const SimEstimate& e) {
        return "SimEstimate(mean=" + std::to_string(e.mean) +
               ", std_err=" + std::to_string(e.std_err) + ")";
      });

  py::class_<PlanarPoint>(m, "PlanarPoint")
      .def_readonly("r", &PlanarPoint::r)
      .def_readonly("theta", &PlanarPoint::theta);

  py::class_<SrpOutageSweep>(m, "SrpOutageSweep")
      .def_readonly("srp", &SrpOutageSweep::srp)
      .def_readonly("outage", &SrpOutageSweep::outage);

  m.def("sample_hppp_annulus", &sample_hppp_annulus, py::arg("lam"), py::arg("r0"),
        py::arg("r_max"), py::arg("rng"));
  m.def("sample_mhcpp_type2", &sample_mhcpp_type2, py::arg("lambda_parent"), py::arg("r0"),
        py::arg("window_half"), py::arg("rng"));
  m.def("simulate_srp", &simulate_srp, py::arg("inputs"), py::arg("sim"),
        py::call_guard<py::gil_scoped_release>());
  m.def("simulate_outage", &simulate_outage, py::arg("inputs"), py::arg("sim"),
        py::call_guard<py::gil_scoped_release>());
  m.def(
      "simulate_metrics_sweep",
      [](const MetricInputs& in, const std::vector<double>& gammas,
         const std::vector<double>& betas, const SimConfig& sim) {
        return simulate_metrics_sweep(in, gammas, betas, sim);
      },
      py::arg("inputs"), py::arg("gamma_list"), py::arg("beta_list"), py::arg("sim"),
      py::call_guard<py::gil_scoped_release>());
  m.def("simulate_laplace", &simulate_laplace, py::arg("inputs"), py::arg("receiver"),
        py::arg("z"), py::arg("sim"), py::call_guard<py::gil_scoped_release>());
  m.def("empirical_retention", &empirical_retention, py::arg("lambda_parent"), py::arg("r0"),
        py::arg("windows"), py::arg("seed"), py::arg("window_half") = -1.0,
        py::call_guard<py::gil_scoped_release>());
  m.def("truncation_bias_ratio", &truncation_bias_ratio, py::arg("inputs"), py::arg("receiver"),
        py::arg("sim"));

  // design solvers
  py::class_<MaxDensityResult>(m, "MaxDensityResult")
      .def_readonly("lambda_d", &MaxDensityResult::lambda_d)
      .def_readonly("lambda_r", &MaxDensityResult::lambda_r)
      .def_readonly("residual", &MaxDensityResult::residual);
  py::class_<MaxDensityTdmaResult>(m, "MaxDensityTdmaResult")
      .def_readonly("lambda_r", &MaxDensityTdmaResult::lambda_r)
      .def_readonly("residual", &MaxDensityTdmaResult::residual);
  py::class_<GuardRadiusResult>(m, "GuardRadiusResult")
      .def_readonly("r0", &GuardRadiusResult::r0)
      .def_readonly("residual", &GuardRadiusResult::residual)
      .def_readonly("iterations", &GuardRadiusResult::iterations)
      .def_readonly("bracket_lo", &GuardRadiusResult::bracket_lo)
      .def_readonly("bracket_hi", &GuardRadiusResult::bracket_hi);
  py::class_<OptimalCommDensity>(m, "OptimalCommDensity")
      .def_readonly("lambda_d_eff", &OptimalCommDensity::lambda_d_eff)
      .def_readonly("lambda_d_raw", &OptimalCommDensity::lambda_d_raw)
      .def_readonly("raw_reachable", &OptimalCommDensity::raw_reachable);
  py::class_<SchemeComparison>(m, "SchemeComparison")
      .def_readonly("srp_soma", &SchemeComparison::srp_soma)
      .def_readonly("srp_tdma", &SchemeComparison::srp_tdma)
      .def_readonly("tc_soma", &SchemeComparison::tc_soma)
      .def_readonly("tc_tdma", &SchemeComparison::tc_tdma)
      .def_readonly("outage_soma", &SchemeComparison::outage_soma)
      .def_readonly("outage_tdma", &SchemeComparison::outage_tdma)
      .def_readonly("case1_holds", &SchemeComparison::case1_holds)
      .def_readonly("case2_holds", &SchemeComparison::case2_holds)
      .def_readonly("prop5_condition", &SchemeComparison::prop5_condition);

  m.def("max_density_srp_soma", &max_density_srp_soma, py::arg("target_srp"),
        py::arg("gamma_th"), py::arg("phi"), py::arg("params"), py::arg("r0"),
        py::arg("ratio") = 1.0);
  m.def("max_density_srp_tdma", &max_density_srp_tdma, py::arg("target_srp"),
        py::arg("gamma_th"), py::arg("params"), py::arg("r0"));
  m.def("min_guard_radius", &min_guard_radius, py::arg("scheme"), py::arg("target_srp"),
        py::arg("gamma_th"), py::arg("densities"), py::arg("params"));
  m.def("optimal_comm_density", &optimal_comm_density, py::arg("beta_th"), py::arg("params"),
        py::arg("r0"), py::arg("scheme"));
  m.def("compare_schemes", &compare_schemes, py::arg("params"), py::arg("densities"),
        py::arg("phi"), py::arg("tau"), py::arg("gamma_th"), py::arg("beta_th"));

  // scenario + sweep harness
  py::class_<ScenarioConfig>(m, "ScenarioConfig")
      .def(py::init<>())
      .def_static("from_json_text", &ScenarioConfig::from_json_text, py::arg("text"))
      .def_static(
          "from_json_file",
          [](const std::string& path) { return ScenarioConfig::from_json_file(path); },
          py::arg("path"))
      .def_readwrite("params", &ScenarioConfig::params)
      .def_readwrite("densities", &ScenarioConfig::densities)
      .def_readwrite("scheme", &ScenarioConfig::scheme)
      .def_readwrite("gamma_th", &ScenarioConfig::gamma_th)
      .def_readwrite("beta_th", &ScenarioConfig::beta_th)
      .def_readwrite("sim", &ScenarioConfig::sim)
      .def("to_json_text", [](const ScenarioConfig& c) { return c.to_json().dump(); })
      .def("metric_inputs",
           [](const ScenarioConfig& c) { return c.metric_inputs(); });

  py::class_<ResultTable>(m, "ResultTable")
      .def_readonly("meta", &ResultTable::meta)
      .def_readonly("columns", &ResultTable::columns)
      .def_readonly("rows", &ResultTable::rows)
      .def("to_csv", &ResultTable::to_csv)
      .def("to_jsonl", &ResultTable::to_jsonl);

  m.def("run_preset", &run_preset, py::arg("base"), py::arg("name"),
        py::arg("simulate") = false, py::arg("ratio") = 1.0,
        py::call_guard<py::gil_scoped_release>());
  m.def("preset_names", &preset_names);
}
