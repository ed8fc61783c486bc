#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace townsend {

// Analytic continuations of cosh(sqrt(t)) and sinh(sqrt(t))/sqrt(t) to all
// real t.  For t < 0 they reduce to cos(sqrt(-t)) and sin(sqrt(-t))/sqrt(-t);
// near t = 0 the even power series (through the t^3 term) avoids the 0/0.
double cosh_sqrt(double t);
double sinhc_sqrt(double t);

// (cosh_sqrt(t) - sinhc_sqrt(t)) / t, which is again analytic at t = 0
// (value 1/3).  Needs a wider series window than the two above because the
// numerator cancels to O(t).
double cosh_sinhc_diff_over_t(double t);

// Second-order finite-difference stencils on a uniform grid of spacing h.
// Interior nodes use central differences; the end nodes use the one-sided
// three-point formulas.
double dx_node(const std::vector<double>& f, double h, std::size_t i);
double dxx_node(const std::vector<double>& f, double h, std::size_t i);

// Composite trapezoid weights for n_nodes uniformly spaced samples.
std::vector<double> trapezoid_weights(std::size_t n_nodes, double h);

// Composite Simpson weights; requires an even number of cells.
std::vector<double> simpson_weights(std::size_t n_nodes, double h);

double integrate(const std::vector<double>& f, const std::vector<double>& w);

// Cumulative integral I(x_i) = int_0^{x_i} f.  Even nodes follow composite
// Simpson; odd nodes add a half panel from the quadratic through the three
// surrounding nodes, so every increment is locally fourth order.
std::vector<double> cumulative_simpson(const std::vector<double>& f, double h);

std::vector<double> cumulative_trapezoid(const std::vector<double>& f, double h);

// Solves the tridiagonal system with constant coefficients arising from the
// second-difference operator: (u[i-1] - 2 u[i] + u[i+1])/h^2 = rhs[i] on
// interior nodes with u[0] = u[n-1] = 0.
std::vector<double> poisson_dirichlet_solve(const std::vector<double>& rhs, double h);

// Bracketing bisection on [lo, hi] with f(lo), f(hi) of opposite sign.
// Iterates until the bracket width falls below rel_tol * |mid| (plus a
// machine-precision floor), so requesting 1e-12 effectively converges to
// machine accuracy near well-conditioned roots.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double rel_tol = 1e-12);

}  // namespace townsend
