#pragma once

#include <optional>
#include <vector>

namespace townsend {

// Physical and model constants of the discharge gap.  The anode sits at
// x = 0, the cathode at x = L, and the cathode voltage is V_c = lambda * L.
struct Parameters {
  double a;      // ionization amplitude (1/length)
  double b;      // ionization field scale (voltage/length)
  double gamma;  // secondary-emission yield
  double k_i;    // ion mobility
  double k_e;    // electron mobility
  double L;      // gap length

  // Throws std::invalid_argument unless a, b, k_i, k_e, L > 0 and gamma >= 0.
  void validate() const;
};

// h, g and their derivatives at a mean field lambda = V_c / L.
//   h(lambda)  = a * lambda * exp(-b/lambda)        (h(0) = 0 by continuity)
//   g(V_c)     = h(lambda) - lambda^2 / 4
//   g_prime    = dg/dV_c = h'(lambda)/L - lambda/(2L)
struct LocalCoefficients {
  double lambda;
  double h;
  double h_prime;
  double g;
  double g_prime;
};

LocalCoefficients eval_coefficients(const Parameters& params, double lambda);

// Ionization rate h(s) = a * s * exp(-b/s) for s > 0, extended by 0 at s = 0.
double ionization_rate(const Parameters& params, double s);
double ionization_rate_prime(const Parameters& params, double s);

// Root and extremum landscape of g(V_c).  All locations are voltages.
//   root_count       0 iff a < e*b/4, 1 iff a = e*b/4, 2 iff a > e*b/4
//   Lambda_star      smallest positive root of g
//   Lambda_sharp     larger root (two-root case only)
//   max_location     V_c of the interior local maximum of g, when one exists
//   Vc_star/Vc_sharp crossings of g with pi^2/L^2 on the rising/falling side,
//                    present only when max_value > pi^2/L^2
struct GLandscape {
  int root_count = 0;
  std::optional<double> Lambda_star;
  std::optional<double> Lambda_sharp;
  std::optional<double> max_location;
  std::optional<double> max_value;
  std::optional<double> Vc_star;
  std::optional<double> Vc_sharp;
};

GLandscape g_landscape(const Parameters& params);

// Uniform grid on [0, L].  An even cell count keeps the composite Simpson
// rules exact panel-by-panel; at least 16 cells are required.
struct Grid {
  int n_cells = 0;
  std::vector<double> nodes;

  static Grid uniform(double L, int n_cells);

  int n_nodes() const { return n_cells + 1; }
  double spacing() const { return nodes[1] - nodes[0]; }
  double length() const { return nodes.back(); }
};

// Discretized reduced state (lambda, rho_i, R_e, V) sampled at grid nodes,
// with rho_i(0) = R_e(0) = V(0) = V(L) = 0.
struct SteadyState {
  double lambda = 0.0;
  std::vector<double> rho_i;
  std::vector<double> R_e;
  std::vector<double> V;

  static SteadyState trivial(double lambda, const Grid& grid);
};

// Fields in physical variables.  u_e divides by rho_e, so it is reported as
// NaN at nodes where rho_e <= floor * max(rho_e).
struct PhysicalFields {
  std::vector<double> rho_i;
  std::vector<double> rho_e;
  std::vector<double> Phi;
  std::vector<double> u_i;
  std::vector<double> v_e;
  std::vector<double> u_e;
};

PhysicalFields to_physical(const SteadyState& state, const Parameters& params,
                           const Grid& grid, double rho_e_floor = 1e-12);

// min over nodes of (dV/dx + lambda), the admissible-set indicator.
double min_field(const SteadyState& state, const Grid& grid);

}  // namespace townsend
