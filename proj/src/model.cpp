#include "townsend/model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "townsend/numerics.hpp"

namespace townsend {

void Parameters::validate() const {
  if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument("Parameters: a must be positive");
  if (!(b > 0.0) || !std::isfinite(b)) throw std::invalid_argument("Parameters: b must be positive");
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw std::invalid_argument("Parameters: gamma must be nonnegative");
  if (!(k_i > 0.0) || !std::isfinite(k_i)) throw std::invalid_argument("Parameters: k_i must be positive");
  if (!(k_e > 0.0) || !std::isfinite(k_e)) throw std::invalid_argument("Parameters: k_e must be positive");
  if (!(L > 0.0) || !std::isfinite(L)) throw std::invalid_argument("Parameters: L must be positive");
}

double ionization_rate(const Parameters& params, double s) {
  if (s <= 0.0) return 0.0;
  return params.a * s * std::exp(-params.b / s);
}

double ionization_rate_prime(const Parameters& params, double s) {
  if (s <= 0.0) return 0.0;
  return params.a * std::exp(-params.b / s) * (1.0 + params.b / s);
}

LocalCoefficients eval_coefficients(const Parameters& params, double lambda) {
  params.validate();
  if (lambda < 0.0) throw std::domain_error("eval_coefficients: lambda must be nonnegative");
  LocalCoefficients c;
  c.lambda = lambda;
  c.h = ionization_rate(params, lambda);
  c.h_prime = ionization_rate_prime(params, lambda);
  c.g = c.h - 0.25 * lambda * lambda;
  c.g_prime = c.h_prime / params.L - 0.5 * lambda / params.L;
  return c;
}

namespace {

// g as a function of the mean field lambda (argument V_c = lambda * L).
double g_of_lambda(const Parameters& p, double lam) {
  return ionization_rate(p, lam) - 0.25 * lam * lam;
}

// dg/dlambda
double g_of_lambda_prime(const Parameters& p, double lam) {
  return ionization_rate_prime(p, lam) - 0.5 * lam;
}

// G(lambda) = log(4a) - log(lambda) - b/lambda; g < 0 iff G < 0.
double big_G(const Parameters& p, double lam) {
  return std::log(4.0 * p.a) - std::log(lam) - p.b / lam;
}

}  // namespace

GLandscape g_landscape(const Parameters& params) {
  params.validate();
  GLandscape out;
  const double b = params.b;
  const double L = params.L;
  const double Gb = big_G(params, b);  // maximum of G sits at lambda = b
  const double tangency_gap = 4.0 * std::numeric_limits<double>::epsilon();

  if (std::abs(Gb) <= tangency_gap) {
    out.root_count = 1;
    out.Lambda_star = b * L;
  } else if (Gb < 0.0) {
    out.root_count = 0;
  } else {
    out.root_count = 2;
    // G is increasing on (0, b] and decreasing on [b, inf)
    double lo = b;
    while (big_G(params, lo) > 0.0) lo *= 0.5;
    out.Lambda_star = L * bisect([&](double s) { return big_G(params, s); }, lo, b);
    double hi = 2.0 * b;
    while (big_G(params, hi) > 0.0) hi *= 2.0;
    out.Lambda_sharp = L * bisect([&](double s) { return big_G(params, s); }, b, hi);
  }

  // Interior maximum of g.  g'(lambda) vanishes at most twice (a local min
  // then the local max); g'' = a b^2 exp(-b/lambda)/lambda^3 - 1/2 is
  // unimodal with peak at lambda = b/3.
  auto gp = [&](double lam) { return g_of_lambda_prime(params, lam); };
  std::optional<double> lam_max;
  if (out.root_count == 1) {
    lam_max = b;  // tangency: the maximum value is exactly 0 at lambda = b
  } else if (out.root_count == 2) {
    // between the roots g > 0, g' changes sign exactly once
    const double lo = *out.Lambda_star / L;
    const double hi = *out.Lambda_sharp / L;
    lam_max = bisect(gp, lo, hi);
  } else {
    const double gpp_peak = 27.0 * params.a * std::exp(-3.0) / b;
    if (gpp_peak > 0.5) {
      auto gpp = [&](double lam) {
        return params.a * b * b * std::exp(-b / lam) / (lam * lam * lam) - 0.5;
      };
      double hi = 2.0 * b / 3.0;
      while (gpp(hi) > 0.0) hi *= 2.0;
      const double c2 = bisect(gpp, b / 3.0, hi);  // g' peaks here
      if (gp(c2) > 0.0) {
        double far = c2;
        while (gp(far) > 0.0) far *= 2.0;
        lam_max = bisect(gp, c2, far);
      }
    }
  }

  if (lam_max) {
    out.max_location = *lam_max * L;
    out.max_value = g_of_lambda(params, *lam_max);
    const double threshold = M_PI * M_PI / (L * L);
    if (*out.max_value > threshold && out.root_count == 2) {
      auto gg = [&](double lam) { return g_of_lambda(params, lam) - threshold; };
      out.Vc_star = L * bisect(gg, *out.Lambda_star / L, *lam_max);
      out.Vc_sharp = L * bisect(gg, *lam_max, *out.Lambda_sharp / L);
    }
  }
  return out;
}

Grid Grid::uniform(double L, int n_cells) {
  if (!(L > 0.0)) throw std::invalid_argument("Grid: L must be positive");
  if (n_cells < 16) throw std::invalid_argument("Grid: at least 16 cells required");
  if (n_cells % 2 != 0) throw std::invalid_argument("Grid: cell count must be even");
  Grid g;
  g.n_cells = n_cells;
  g.nodes.resize(n_cells + 1);
  const double h = L / n_cells;
  for (int i = 0; i <= n_cells; ++i) g.nodes[i] = i * h;
  g.nodes.back() = L;
  return g;
}

SteadyState SteadyState::trivial(double lambda, const Grid& grid) {
  SteadyState s;
  s.lambda = lambda;
  s.rho_i.assign(grid.n_nodes(), 0.0);
  s.R_e.assign(grid.n_nodes(), 0.0);
  s.V.assign(grid.n_nodes(), 0.0);
  return s;
}

PhysicalFields to_physical(const SteadyState& state, const Parameters& params,
                           const Grid& grid, double rho_e_floor) {
  params.validate();
  const std::size_t n = grid.nodes.size();
  const double h = grid.spacing();
  const double lambda = state.lambda;
  PhysicalFields f;
  f.rho_i = state.rho_i;
  f.rho_e.resize(n);
  f.Phi.resize(n);
  f.u_i.resize(n);
  f.v_e.resize(n);
  f.u_e.assign(n, std::numeric_limits<double>::quiet_NaN());

  for (std::size_t i = 0; i < n; ++i) {
    const double x = grid.nodes[i];
    f.rho_e[i] = state.R_e[i] * std::exp(-0.5 * lambda * x);
    f.Phi[i] = state.V[i] + lambda * x;
  }
  double rho_e_max = 0.0;
  for (double v : f.rho_e) rho_e_max = std::max(rho_e_max, std::abs(v));
  const double floor = rho_e_floor * rho_e_max;

  for (std::size_t i = 0; i < n; ++i) {
    const double dPhi = dx_node(f.Phi, h, i);
    f.u_i[i] = params.k_i * dPhi;
    f.v_e[i] = -params.k_e * dPhi;
    if (f.rho_e[i] > floor && rho_e_max > 0.0) {
      f.u_e[i] = f.v_e[i] - params.k_e * dx_node(f.rho_e, h, i) / f.rho_e[i];
    }
  }
  return f;
}

double min_field(const SteadyState& state, const Grid& grid) {
  const double h = grid.spacing();
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < state.V.size(); ++i) {
    m = std::min(m, dx_node(state.V, h, i) + state.lambda);
  }
  return m;
}

}  // namespace townsend
