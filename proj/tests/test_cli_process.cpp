// Exercises the installed command line surface end to end: exit codes,
// record shapes, determinism of rendered artifacts.

#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#ifndef UAVCX_CLI_PATH
#error "UAVCX_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output; // stdout only
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(UAVCX_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("single evaluation emits one JSON record") {
  const RunResult r = run_cli("eval --metric srp --scheme tdma --gamma-th-db -10");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"metric\": \"srp\"") != std::string::npos);
  CHECK(r.output.find("\"scheme\": \"tdma\"") != std::string::npos);
  CHECK(r.output.find("\"analytic\": 0.6469636687107999") != std::string::npos);
}

TEST_CASE("preset sweeps render deterministic CSV") {
  const RunResult a = run_cli("eval --preset fig3a");
  const RunResult b = run_cli("eval --preset fig3a");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.rfind("# {", 0) == 0);
  CHECK(a.output.find("gamma_th_db,srp_soma_r0_5,srp_tdma_r0_5") != std::string::npos);
}

TEST_CASE("simulated eval carries estimate and standard error") {
  const RunResult r = run_cli(
      "eval --metric srp --scheme tdma --gamma-th-db -10 --simulate "
      "--trials 500 --r-max 300 --lambda-r 0.002 --seed 7");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"simulated\":") != std::string::npos);
  CHECK(r.output.find("\"std_err\":") != std::string::npos);
}

TEST_CASE("exit code 1 on configuration errors") {
  CHECK(run_cli("eval --gamma-th-db -10 --gamma-th 0.1").exit_code == 1);
  CHECK(run_cli("eval --config /nonexistent.json").exit_code == 1);
  CHECK(run_cli("eval --preset fig99").exit_code == 1);
  CHECK(run_cli("solve no-such-solver").exit_code == 1);
}

TEST_CASE("exit code 2 on infeasible design targets") {
  CHECK(run_cli("solve min-guard-radius --target-srp 1.0").exit_code == 2);
  CHECK(run_cli("solve max-density-soma --target-srp 0.9 --phi 1.0").exit_code == 2);
}

TEST_CASE("solver output round trips through eval") {
  const RunResult solved = run_cli("solve max-density-tdma --target-srp 0.9 --gamma-th-db -10");
  REQUIRE(solved.exit_code == 0);
  const std::string key = "\"lambda_r_raw\": ";
  const std::size_t at = solved.output.find(key);
  REQUIRE(at != std::string::npos);
  const double raw = std::strtod(solved.output.c_str() + at + key.size(), nullptr);
  char args[256];
  std::snprintf(args, sizeof args,
                "eval --metric srp --scheme tdma --gamma-th-db -10 --lambda-r %.17g", raw);
  const RunResult checked = run_cli(args);
  CHECK(checked.exit_code == 0);
  const std::string akey = "\"analytic\": ";
  const std::size_t apos = checked.output.find(akey);
  REQUIRE(apos != std::string::npos);
  const double srp_back = std::strtod(checked.output.c_str() + apos + akey.size(), nullptr);
  CHECK(std::fabs(srp_back - 0.9) < 1e-6);
}

TEST_CASE("config file feeds the pipeline") {
  const std::string path = "/tmp/uavcx_cli_test_config.json";
  {
    std::ofstream out(path);
    out << R"({"lambda_d_raw": 0.002, "scheme": {"tdma": {"tau": 0.25}}, "beta_th_db": 0})";
  }
  const RunResult r = run_cli("eval --config " + path + " --metric tc --scheme tdma");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"metric\": \"tc_nats\"") != std::string::npos);
  std::remove(path.c_str());
}

TEST_SUITE_END();
