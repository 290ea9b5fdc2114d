#pragma once

#include <functional>

// Test-only oracles, independent of the library evaluation paths: adaptive
// Gauss-Kronrod (G7, K15) quadrature plus an incomplete-beta evaluator built
// on it. The u^{a-1} endpoint singularity is removed by the substitution
// u = t^{1/a}, which maps B(x; a, b) to (1/a) * int_0^{x^a} (1-t^{1/a})^{b-1} dt;
// arguments above 1/2 go through the tail symmetry so the remaining
// singularity never sits inside an integration interval.
namespace uavcx::test {

double gauss_kronrod(const std::function<double(double)>& f, double a, double b,
                     double rel_tol = 1e-13, double abs_tol = 1e-300);

double incomplete_beta_quadrature(double x, double a, double b);
double beta_quadrature(double a, double b);

} // namespace uavcx::test
