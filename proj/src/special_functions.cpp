#include "uavcx/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace uavcx {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Lanczos coefficients, g = 7, n = 9.
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double log_gamma_lanczos(double x) {
  // valid for x >= 0.5
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (x - 1.0 + i);
  const double t = x + 6.5;
  return 0.5 * std::log(2.0 * kPi) + (x - 0.5) * std::log(t) - t + std::log(acc);
}

// Continued fraction for the regularized incomplete beta (Lentz's method).
double beta_cf(double x, double a, double b) {
  constexpr double kEps = 3.0e-16;
  constexpr double kTiny = 1.0e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 300; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) <= kEps) return h;
  }
  throw std::runtime_error("incomplete_beta: continued fraction failed to converge");
}

// exp(a ln x + b ln(1-x) - ln a) * CF, the non-regularized tail building block.
double incomplete_beta_lower(double x, double a, double b) {
  const double front = std::exp(a * std::log(x) + b * std::log1p(-x) - std::log(a));
  return front * beta_cf(x, a, b);
}

} // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
  if (x < 0.5) {
    // reflection: ln G(x) = ln(pi / sin(pi x)) - ln G(1 - x)
    return std::log(kPi / std::sin(kPi * x)) - log_gamma_lanczos(1.0 - x);
  }
  return log_gamma_lanczos(x);
}

double beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("beta: requires a, b > 0");
  return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

double incomplete_beta(double x, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::domain_error("incomplete_beta: requires a, b > 0");
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error("incomplete_beta: requires x in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return beta(a, b);
  if (x < (a + 1.0) / (a + b + 2.0)) return incomplete_beta_lower(x, a, b);
  return beta(a, b) - incomplete_beta_lower(1.0 - x, b, a);
}

} // namespace uavcx
