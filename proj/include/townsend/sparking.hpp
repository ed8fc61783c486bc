#pragma once

#include <optional>
#include <vector>

#include "townsend/model.hpp"

namespace townsend {

// One evaluation of the sparking function
//   D(V_c) = cosh(mu) + (V_c / (2 mu)) sinh(mu) - gamma/(1+gamma) e^{V_c/2},
//   mu = L sqrt(-g(V_c)),
// continued through g = 0 (linear case) and g > 0 (trigonometric case).
// D_normalized = (1+gamma) e^{-V_c/2} D is evaluated in scaled form, so it
// stays finite for arbitrarily large V_c.
struct SparkEval {
  double V_c;
  double g;
  std::optional<double> mu;  // present when g <= 0
  double D;
  double D_normalized;
  double D_prime;
};

SparkEval eval_D(const Parameters& params, double V_c);

struct SparkRoot {
  double V_c;
  double g_at_root;
  bool satisfies_positive1;  // g at the root < pi^2/L^2
  bool tangential = false;   // detected as |D_normalized| < 1e-13 without a sign change
};

// Every sign change of D_normalized on (0, V_max] at the given resolution,
// refined by bisection.  Requires V_max > 0 and 0 < step <= V_max/100.
std::vector<SparkRoot> scan_roots(const Parameters& params, double V_max, double step);

struct NondegeneracyFlags {
  bool g_nonzero_at_dagger = false;
  bool D_prime_nonzero_at_dagger = false;
};

struct RegimeFlags {
  bool condA1 = false;             // a > e b/4 + e pi^2/(b L^2): g exceeds pi^2/L^2
  bool condA2 = false;             // gamma/(1+gamma) > e^{-aL}: root from secondary emission
  bool lemmaA3_no_root = false;    // a < e b/4 and gamma/(1+gamma) <= e^{-2aL}
  bool gamma_degenerate_locus = false;  // gamma within 1e-6 of (1+W/2)/(e^{W/2}-1-W/2) at a root W of g
  NondegeneracyFlags nondegeneracy;
};

struct ScanWindow {
  double V_max = 0.0;
  double step = 0.0;
  double asymptotic_slope = 0.0;  // e^{-aL} - gamma/(1+gamma)
  bool window_sufficient = false; // D_normalized negative and decreasing at V_max
};

struct SparkReport {
  std::vector<SparkRoot> roots;
  std::optional<double> sparking_voltage;       // smallest root
  std::vector<SparkRoot> anti_spark_candidates; // later roots with positive1
  RegimeFlags regime_flags;
  ScanWindow window;
  bool inconsistent = false;  // no roots found although condA1 or condA2 holds
};

// Assembles the scan, the sparking voltage and the Appendix predicates.
// V_max = 0 selects the default window max(40, 4*Lambda_sharp, 4*b*L).
SparkReport sparking_report(const Parameters& params, double V_max = 0.0,
                            double step = 1e-3);

struct DaggerBounds {
  double V_c_dagger;
  double g_at_dagger;
  std::optional<double> Lambda_star;
  bool B1_band;  // g(V_c^dagger) in (pi^2/(4L^2), pi^2/L^2)
  bool B2_band;  // V_c^dagger < Lambda_star
};

// Location checks for the sparking voltage (small/large gamma bands).
// Throws std::invalid_argument when the report has no sparking voltage.
DaggerBounds locate_dagger_bounds(const Parameters& params, const SparkReport& report);

}  // namespace townsend
