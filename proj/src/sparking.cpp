#include "townsend/sparking.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "townsend/numerics.hpp"

namespace townsend {

namespace {
constexpr double kSeriesBand = 1e-8;      // |g| L^2 below this: series branch
constexpr double kTangentialTol = 1e-13;  // tangential-root detection
constexpr double kRootRelTol = 1e-15;     // bisection refinement (exceeds the 1e-12 bound)
}  // namespace

SparkEval eval_D(const Parameters& params, double V_c) {
  params.validate();
  if (!(V_c > 0.0)) throw std::domain_error("eval_D: V_c must be positive");

  const double L = params.L;
  const double lambda = V_c / L;
  const LocalCoefficients lc = eval_coefficients(params, lambda);
  const double g = lc.g;
  const double t = -g * L * L;  // = mu^2 when g <= 0
  const double gr = params.gamma / (1.0 + params.gamma);

  double scaled;  // e^{-V_c/2} D, overflow-free in every branch
  double C, S;
  if (t >= kSeriesBand) {
    // hyperbolic branch: mu <= V_c/2 since h >= 0, so both exponentials <= 1
    const double mu = std::sqrt(t);
    const double ep = std::exp(mu - 0.5 * V_c);
    const double em = std::exp(-mu - 0.5 * V_c);
    scaled = 0.5 * (ep + em) + V_c / (4.0 * mu) * (ep - em) - gr;
    C = std::cosh(mu);
    S = std::sinh(mu) / mu;
  } else {
    C = cosh_sqrt(t);
    S = sinhc_sqrt(t);
    scaled = std::exp(-0.5 * V_c) * (C + 0.5 * V_c * S) - gr;
  }

  SparkEval ev;
  ev.V_c = V_c;
  ev.g = g;
  if (g <= 0.0) ev.mu = L * std::sqrt(-g);
  const double E = std::exp(0.5 * V_c);
  ev.D = E * scaled;
  ev.D_normalized = (1.0 + params.gamma) * scaled;
  // dD/dV_c from the closed form, with (C - S)/t handled by its own series
  const double W = cosh_sinhc_diff_over_t(t);
  const double t_prime = -L * L * lc.g_prime;
  ev.D_prime = t_prime * (0.5 * S + 0.25 * V_c * W) + 0.5 * S - 0.5 * gr * E;
  return ev;
}

std::vector<SparkRoot> scan_roots(const Parameters& params, double V_max, double step) {
  params.validate();
  if (!(V_max > 0.0) || !(step > 0.0) || step > V_max / 100.0) {
    throw std::invalid_argument("scan_roots: require V_max > 0 and 0 < step <= V_max/100");
  }
  const double pos1 = M_PI * M_PI / (params.L * params.L);
  std::vector<SparkRoot> roots;

  auto Dn = [&](double v) { return eval_D(params, v).D_normalized; };

  auto push_root = [&](double v, bool tangential) {
    // de-duplicate roots that coincide to scan resolution
    for (const SparkRoot& r : roots) {
      if (std::abs(r.V_c - v) <= 0.5 * step) return;
    }
    SparkRoot r;
    r.V_c = v;
    r.g_at_root = eval_coefficients(params, v / params.L).g;
    r.satisfies_positive1 = r.g_at_root < pos1;
    r.tangential = tangential;
    roots.push_back(r);
  };

  double v_prev = step;
  double f_prev = Dn(v_prev);
  if (std::abs(f_prev) < kTangentialTol) push_root(v_prev, true);
  const long K = static_cast<long>(std::ceil(V_max / step));
  for (long k = 2; k <= K; ++k) {
    const double v = std::min(k * step, V_max);
    if (v <= v_prev) continue;
    const double f = Dn(v);
    if (std::abs(f) < kTangentialTol) {
      push_root(v, true);
    } else if ((f < 0.0) != (f_prev < 0.0) && std::abs(f_prev) >= kTangentialTol) {
      const double root = bisect(Dn, v_prev, v, kRootRelTol);
      push_root(root, false);
    }
    v_prev = v;
    f_prev = f;
  }
  std::sort(roots.begin(), roots.end(),
            [](const SparkRoot& x, const SparkRoot& y) { return x.V_c < y.V_c; });
  return roots;
}

SparkReport sparking_report(const Parameters& params, double V_max, double step) {
  params.validate();
  const GLandscape land = g_landscape(params);

  SparkReport rep;
  if (V_max <= 0.0) {
    V_max = std::max(40.0, 4.0 * params.b * params.L);
    if (land.Lambda_sharp) V_max = std::max(V_max, 4.0 * *land.Lambda_sharp);
  }
  rep.window.V_max = V_max;
  rep.window.step = step;
  rep.window.asymptotic_slope =
      std::exp(-params.a * params.L) - params.gamma / (1.0 + params.gamma);
  {
    const SparkEval tail = eval_D(params, V_max);
    rep.window.window_sufficient =
        rep.window.asymptotic_slope < 0.0 && tail.D_normalized < 0.0 && tail.D_prime < 0.0;
  }

  rep.roots = scan_roots(params, V_max, step);
  if (!rep.roots.empty()) {
    rep.sparking_voltage = rep.roots.front().V_c;
    for (std::size_t i = 1; i < rep.roots.size(); ++i) {
      if (rep.roots[i].satisfies_positive1) rep.anti_spark_candidates.push_back(rep.roots[i]);
    }
  }

  const double e1 = std::exp(1.0);
  RegimeFlags& fl = rep.regime_flags;
  // CondA1 written with the L-aware pi^2 term; identical to the L = 1 form.
  fl.condA1 = params.a > 0.25 * e1 * params.b +
                             e1 * M_PI * M_PI / (params.b * params.L * params.L);
  const double gr = params.gamma / (1.0 + params.gamma);
  fl.condA2 = gr > std::exp(-params.a * params.L);
  fl.lemmaA3_no_root =
      params.a < 0.25 * e1 * params.b && gr <= std::exp(-2.0 * params.a * params.L);

  auto near_degenerate = [&](double W) {
    const double denom = std::expm1(0.5 * W) - 0.5 * W;
    if (denom <= 0.0) return false;
    return std::abs(params.gamma - (1.0 + 0.5 * W) / denom) < 1e-6;
  };
  if (land.Lambda_star && near_degenerate(*land.Lambda_star)) fl.gamma_degenerate_locus = true;
  if (land.Lambda_sharp && near_degenerate(*land.Lambda_sharp)) fl.gamma_degenerate_locus = true;

  if (rep.sparking_voltage) {
    const SparkEval at = eval_D(params, *rep.sparking_voltage);
    fl.nondegeneracy.g_nonzero_at_dagger = std::abs(at.g) > 1e-10;
    fl.nondegeneracy.D_prime_nonzero_at_dagger = std::abs(at.D_prime) > 1e-10;
  }

  rep.inconsistent = rep.roots.empty() && (fl.condA1 || fl.condA2);
  return rep;
}

DaggerBounds locate_dagger_bounds(const Parameters& params, const SparkReport& report) {
  params.validate();
  if (!report.sparking_voltage) {
    throw std::invalid_argument("locate_dagger_bounds: report has no sparking voltage");
  }
  DaggerBounds out;
  out.V_c_dagger = *report.sparking_voltage;
  out.g_at_dagger = eval_coefficients(params, out.V_c_dagger / params.L).g;
  const GLandscape land = g_landscape(params);
  out.Lambda_star = land.Lambda_star;
  const double pi2 = M_PI * M_PI / (params.L * params.L);
  out.B1_band = out.g_at_dagger > 0.25 * pi2 && out.g_at_dagger < pi2;
  out.B2_band = land.Lambda_star && out.V_c_dagger < *land.Lambda_star;
  return out;
}

}  // namespace townsend
