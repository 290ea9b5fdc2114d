#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "support/truncated_laplace.hpp"
#include "uavcx/monte_carlo.hpp"
#include "uavcx/special_functions.hpp"

using namespace uavcx;
using test::laplace_truncated;
using test::tail_inflation_bound;

namespace {

double rel_err(double got, double want) {
  return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}

MetricInputs scenario(const AccessScheme& scheme, double lam_d_raw, double lam_r_raw, double r0,
                      double gamma_th, double beta_th) {
  DensityConfig dens;
  dens.lambda_d_raw = lam_d_raw;
  dens.lambda_r_raw = lam_r_raw;
  dens.r0 = r0;
  return make_metric_inputs(RadioParams{}, scheme, dens, gamma_th, beta_th);
}

} // namespace

TEST_SUITE_BEGIN("monte_carlo");

TEST_CASE("annulus sampling: counts and area uniformity") {
  RngStream rng(1001);
  CHECK(sample_hppp_annulus(0.0, 5.0, 500.0, rng).empty());

  const double lambda = 0.01, r0 = 5.0, r_max = 500.0;
  const double want_mean = lambda * kPi * (r_max * r_max - r0 * r0); // 7853.2
  double total = 0.0;
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) {
    const PointSet pts = sample_hppp_annulus(lambda, r0, r_max, rng);
    total += static_cast<double>(pts.size());
    if (i == 0) {
      for (const auto& p : pts) {
        REQUIRE(p.r > r0);
        REQUIRE(p.r <= r_max);
      }
    }
  }
  CHECK(std::fabs(total / draws / want_mean - 1.0) < 0.01);

  // Kolmogorov-Smirnov on r^2, which must be uniform over (r0^2, r_max^2]
  const PointSet pts = sample_hppp_annulus(0.13, r0, r_max, rng); // ~102k points
  std::vector<double> u;
  u.reserve(pts.size());
  for (const auto& p : pts)
    u.push_back((p.r * p.r - r0 * r0) / (r_max * r_max - r0 * r0));
  std::sort(u.begin(), u.end());
  double d_stat = 0.0;
  const double n = static_cast<double>(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double lo = static_cast<double>(i) / n;
    const double hi = static_cast<double>(i + 1) / n;
    d_stat = std::max({d_stat, std::fabs(u[i] - lo), std::fabs(u[i] - hi)});
  }
  CHECK(d_stat < 1.63 / std::sqrt(n)); // 1% critical value
}

TEST_CASE("matern type-II thinning") {
  RngStream rng(1002);
  CHECK(sample_mhcpp_type2(0.0, 5.0, 50.0, rng).empty());

  // retained density vs the thinning formula at pi r0^2 lambda = 0.7854
  const double lambda = 0.01, r0 = 5.0;
  const double predicted = effective_density(lambda, r0);
  const double estimated = empirical_retention(lambda, r0, 1000, 991144);
  CHECK(std::fabs(estimated / predicted - 1.0) < 0.05);

  // hard core: no retained pair closer than r0, in every realization
  for (int w = 0; w < 30; ++w) {
    const PointSet pts = sample_mhcpp_type2(0.02, 4.0, 40.0, rng);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const double xi = pts[i].r * std::cos(pts[i].theta);
      const double yi = pts[i].r * std::sin(pts[i].theta);
      CHECK(std::fabs(xi) <= 40.0 + 1e-9);
      CHECK(std::fabs(yi) <= 40.0 + 1e-9);
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        const double xj = pts[j].r * std::cos(pts[j].theta);
        const double yj = pts[j].r * std::sin(pts[j].theta);
        CHECK(std::hypot(xi - xj, yi - yj) > 4.0);
      }
    }
  }
}

TEST_CASE("empirical retention limits") {
  // sparse regime: thinning is invisible
  const double sparse = empirical_retention(1e-5, 5.0, 4000, 7, 500.0);
  CHECK(std::fabs(sparse / 1e-5 - 1.0) < 0.01);

  // a wider core thins harder
  const double tight = empirical_retention(0.01, 5.0, 400, 8);
  const double wide = empirical_retention(0.01, 10.0, 400, 8);
  CHECK(wide < tight);
}

TEST_CASE("simulate_srp without interferers is certain") {
  MetricInputs in = scenario(Tdma{0.5}, 0.0, 0.0, 5.0, db_to_linear(-10.0), 0.1);
  SimConfig sim;
  sim.trials = 200;
  sim.r_max = 500.0;
  const SimEstimate est = simulate_srp(in, sim);
  CHECK(est.mean == 1.0);
  CHECK(est.std_err == 0.0);
  CHECK(est.trials == 200);
}

TEST_CASE("simulate_srp agrees with the transform it samples") {
  const MetricInputs in = scenario(Tdma{0.5}, 0.01, 0.005, 5.0, db_to_linear(-10.0), 0.1);
  SimConfig sim;
  sim.trials = 20000;
  sim.r_max = 2000.0;
  sim.seed = 2024;
  const SimEstimate est = simulate_srp(in, sim);

  // truncation-matched oracle: only Monte Carlo noise separates the two
  const double z = srp_laplace_argument(in);
  const double truncated = laplace_truncated(in, Receiver::kRadar, z, sim.r_max);
  CHECK(std::fabs(est.mean - truncated) <= 4.0 * est.std_err);

  // against the infinite-field closed form the truncation bias enters
  const double closed = srp(in).value;
  CHECK(std::fabs(est.mean - closed) <= std::max(0.02, 4.0 * est.std_err));
}

TEST_CASE("simulate_outage zero-density and noise-dominated limits") {
  MetricInputs quiet = scenario(Soma{0.5}, 0.0, 0.0, 5.0, 0.1, db_to_linear(-5.0));
  SimConfig sim;
  sim.trials = 200;
  sim.r_max = 500.0;
  CHECK(simulate_outage(quiet, sim).mean == 0.0);

  MetricInputs noisy = quiet;
  noisy.params.n0 = 1000.0; // a kilowatt of noise at a nanowatt link
  SimConfig noisy_sim = sim;
  noisy_sim.trials = 4000;
  noisy_sim.include_noise = true;
  CHECK(simulate_outage(noisy, noisy_sim).mean >= 0.999);
}

TEST_CASE("simulate_outage agrees with the transform it samples") {
  const MetricInputs in = scenario(Soma{0.5}, 0.002, 0.005, 5.0, 0.1, db_to_linear(-5.0));
  SimConfig sim;
  sim.trials = 10000;
  sim.r_max = 2000.0;
  sim.seed = 2025;
  const SimEstimate est = simulate_outage(in, sim);
  const double z = outage_laplace_argument(in);
  const double truncated = 1.0 - laplace_truncated(in, Receiver::kData, z, sim.r_max);
  CHECK(std::fabs(est.mean - truncated) <= 4.0 * est.std_err);
  CHECK(std::fabs(est.mean - outage(in).value) <= std::max(0.02, 4.0 * est.std_err));
}

TEST_CASE("estimates are invariant to the worker layout") {
  const MetricInputs in = scenario(Soma{0.5}, 0.001, 0.001, 5.0, db_to_linear(-10.0),
                                   db_to_linear(-5.0));
  SimConfig sim;
  sim.trials = 6000;
  sim.r_max = 500.0;
  sim.seed = 77;
  const std::vector<double> gammas = {db_to_linear(-12.0), db_to_linear(-6.0)};
  const std::vector<double> betas = {db_to_linear(-5.0)};

  sim.threads = 1;
  const SrpOutageSweep solo = simulate_metrics_sweep(in, gammas, betas, sim);
  sim.threads = 3;
  const SrpOutageSweep pooled = simulate_metrics_sweep(in, gammas, betas, sim);
  for (std::size_t i = 0; i < gammas.size(); ++i)
    CHECK(solo.srp[i].mean == pooled.srp[i].mean);
  CHECK(solo.outage[0].mean == pooled.outage[0].mean);

  // laplace means use block-wise reduction for the same guarantee
  sim.threads = 1;
  const SimEstimate la = simulate_laplace(in, Receiver::kRadar, 1.0 / in.params.k1(), sim);
  sim.threads = 4;
  const SimEstimate lb = simulate_laplace(in, Receiver::kRadar, 1.0 / in.params.k1(), sim);
  CHECK(la.mean == lb.mean);
  CHECK(la.std_err == lb.std_err);
}

TEST_CASE("threshold sweeps reuse the field of single-threshold runs") {
  const MetricInputs in = scenario(Tdma{0.5}, 0.002, 0.002, 5.0, db_to_linear(-10.0), 0.1);
  SimConfig sim;
  sim.trials = 4000;
  sim.r_max = 800.0;
  sim.seed = 31;
  const std::vector<double> gammas = {db_to_linear(-14.0), db_to_linear(-10.0),
                                      db_to_linear(-6.0)};
  const SrpOutageSweep sweep = simulate_metrics_sweep(in, gammas, {}, sim);
  MetricInputs single = in;
  single.gamma_th = gammas[1];
  CHECK(sweep.srp[1].mean == simulate_srp(single, sim).mean);
}

TEST_CASE("SOMA ranging and outage share one interference field") {
  const MetricInputs in = scenario(Soma{0.5}, 0.003, 0.01, 5.0, db_to_linear(-10.0),
                                   db_to_linear(-5.0));
  SimConfig sim;
  sim.trials = 3000;
  sim.r_max = 800.0;
  sim.seed = 99;
  const double z = 0.5 / in.params.k1();
  const SimEstimate radar_side = simulate_laplace(in, Receiver::kRadar, z, sim);
  const SimEstimate data_side = simulate_laplace(in, Receiver::kData, z, sim);
  CHECK(radar_side.mean == data_side.mean); // identical samples, not just close
}

TEST_CASE("empirical laplace matches the closed transform") {
  // effective densities set directly: lambda_d = lambda_r = 0.005
  MetricInputs in = scenario(Soma{0.5}, 0.005, 0.005, 5.0, 0.1, 0.1);
  in.eff = EffectiveDensities{0.005, 0.005, invert_effective_density(0.005, 5.0)};
  SimConfig sim;
  sim.trials = 3000;
  sim.r_max = 2000.0;
  sim.seed = 1234;
  const double z = 1.0 / in.params.k1();
  const SimEstimate est = simulate_laplace(in, Receiver::kRadar, z, sim);
  const double closed = laplace_interference(z, in, Receiver::kRadar);
  CHECK(rel_err(closed, 0.97233238399643696) < 1e-12);
  const double slack = tail_inflation_bound(in, Receiver::kRadar, z, sim.r_max);
  CHECK(std::fabs(est.mean - closed) <= 3.0 * est.std_err + slack);
}

TEST_CASE("standard error shrinks with the square root of trials") {
  const MetricInputs in = scenario(Tdma{0.5}, 0.002, 0.002, 5.0, db_to_linear(-10.0), 0.1);
  SimConfig sim;
  sim.r_max = 500.0;
  sim.seed = 5;
  sim.trials = 1000;
  const double se1 = simulate_srp(in, sim).std_err;
  sim.trials = 4000;
  const double se4 = simulate_srp(in, sim).std_err;
  CHECK(se1 / se4 > 1.6);
  CHECK(se1 / se4 < 2.4);
}

TEST_CASE("truncation bias diagnostic") {
  const MetricInputs in = scenario(Soma{0.5}, 0.01, 0.1, 5.0, 0.1, 0.1);
  SimConfig sim; // r_max = 5000
  const double ratio = truncation_bias_ratio(in, Receiver::kRadar, sim);
  // r_max^{-1/2} tail: about 3.3% of the in-range mean at the reference setup
  CHECK(ratio > 0.025);
  CHECK(ratio < 0.04);
  SimConfig wider = sim;
  wider.r_max = 50000.0;
  CHECK(truncation_bias_ratio(in, Receiver::kRadar, wider) < ratio);
}

TEST_CASE("matern-mode simulation stays consistent with HPPP mode") {
  // small field so the Matern window stays cheap; the two samplers agree
  // through the effective-density approximation, not bit for bit
  const MetricInputs in = scenario(Tdma{0.5}, 0.01, 0.02, 5.0, db_to_linear(-10.0), 0.1);
  SimConfig hppp;
  hppp.trials = 3000;
  hppp.r_max = 300.0;
  hppp.seed = 404;
  SimConfig matern = hppp;
  matern.use_mhcpp = true;
  const SimEstimate a = simulate_srp(in, hppp);
  const SimEstimate b = simulate_srp(in, matern);
  CHECK(std::fabs(a.mean - b.mean) <= 0.02 + 4.0 * (a.std_err + b.std_err));
}

TEST_SUITE_END();
