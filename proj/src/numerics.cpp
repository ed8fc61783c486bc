#include "townsend/numerics.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace townsend {

namespace {
constexpr double kSeriesBand = 1e-8;   // |t| below this: 4-term even series
constexpr double kDiffBand = 1e-2;     // wider band for the cancelling difference
}  // namespace

double cosh_sqrt(double t) {
  if (t > kSeriesBand) {
    return std::cosh(std::sqrt(t));
  }
  if (t < -kSeriesBand) {
    return std::cos(std::sqrt(-t));
  }
  return 1.0 + t * (1.0 / 2.0 + t * (1.0 / 24.0 + t / 720.0));
}

double sinhc_sqrt(double t) {
  if (t > kSeriesBand) {
    const double m = std::sqrt(t);
    return std::sinh(m) / m;
  }
  if (t < -kSeriesBand) {
    const double m = std::sqrt(-t);
    return std::sin(m) / m;
  }
  return 1.0 + t * (1.0 / 6.0 + t * (1.0 / 120.0 + t / 5040.0));
}

double cosh_sinhc_diff_over_t(double t) {
  if (std::abs(t) < kDiffBand) {
    // (cosh_sqrt - sinhc_sqrt)/t = sum_{k>=1} t^{k-1} * 2k/(2k+1)!
    return 1.0 / 3.0 +
           t * (1.0 / 30.0 + t * (1.0 / 840.0 + t * (1.0 / 45360.0 + t / 3991680.0)));
  }
  return (cosh_sqrt(t) - sinhc_sqrt(t)) / t;
}

double dx_node(const std::vector<double>& f, double h, std::size_t i) {
  const std::size_t n = f.size();
  assert(n >= 3 && i < n);
  if (i == 0) {
    return (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
  }
  if (i == n - 1) {
    return (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
  }
  return (f[i + 1] - f[i - 1]) / (2.0 * h);
}

double dxx_node(const std::vector<double>& f, double h, std::size_t i) {
  const std::size_t n = f.size();
  assert(n >= 4 && i < n);
  if (i == 0) {
    return (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) / (h * h);
  }
  if (i == n - 1) {
    return (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) / (h * h);
  }
  return (f[i + 1] - 2.0 * f[i] + f[i - 1]) / (h * h);
}

std::vector<double> trapezoid_weights(std::size_t n_nodes, double h) {
  assert(n_nodes >= 2);
  std::vector<double> w(n_nodes, h);
  w.front() = 0.5 * h;
  w.back() = 0.5 * h;
  return w;
}

std::vector<double> simpson_weights(std::size_t n_nodes, double h) {
  assert(n_nodes >= 3 && n_nodes % 2 == 1);  // even cell count
  std::vector<double> w(n_nodes, 0.0);
  for (std::size_t k = 0; k + 2 < n_nodes; k += 2) {
    w[k] += h / 3.0;
    w[k + 1] += 4.0 * h / 3.0;
    w[k + 2] += h / 3.0;
  }
  return w;
}

double integrate(const std::vector<double>& f, const std::vector<double>& w) {
  assert(f.size() == w.size());
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += w[i] * f[i];
  return s;
}

std::vector<double> cumulative_simpson(const std::vector<double>& f, double h) {
  const std::size_t n = f.size();
  assert(n >= 3);
  std::vector<double> I(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) {
    double panel;
    if (i % 2 == 0) {
      // completes a Simpson pair over [x_{i-2}, x_i]
      panel = h / 3.0 * (f[i - 2] + 4.0 * f[i - 1] + f[i]) -
              (I[i - 1] - I[i - 2]);
    } else if (i + 1 < n) {
      // half panel from the quadratic through (i-1, i, i+1)
      panel = h / 12.0 * (5.0 * f[i - 1] + 8.0 * f[i] - f[i + 1]);
    } else {
      // last node with odd index: quadratic through the trailing three nodes
      panel = h / 12.0 * (-f[i - 2] + 8.0 * f[i - 1] + 5.0 * f[i]);
    }
    I[i] = I[i - 1] + panel;
  }
  return I;
}

std::vector<double> cumulative_trapezoid(const std::vector<double>& f, double h) {
  std::vector<double> I(f.size(), 0.0);
  for (std::size_t i = 1; i < f.size(); ++i) {
    I[i] = I[i - 1] + 0.5 * h * (f[i - 1] + f[i]);
  }
  return I;
}

std::vector<double> poisson_dirichlet_solve(const std::vector<double>& rhs, double h) {
  const std::size_t n = rhs.size();
  assert(n >= 3);
  const std::size_t m = n - 2;  // interior unknowns
  std::vector<double> u(n, 0.0);
  // Thomas algorithm for (1, -2, 1)/h^2
  std::vector<double> c(m, 0.0), d(m, 0.0);
  const double a = 1.0 / (h * h);
  const double b = -2.0 / (h * h);
  c[0] = a / b;
  d[0] = rhs[1] / b;
  for (std::size_t k = 1; k < m; ++k) {
    const double denom = b - a * c[k - 1];
    c[k] = a / denom;
    d[k] = (rhs[k + 1] - a * d[k - 1]) / denom;
  }
  u[m] = d[m - 1];
  for (std::size_t k = m - 1; k >= 1; --k) {
    u[k] = d[k - 1] - c[k - 1] * u[k + 1];
  }
  return u;
}

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double rel_tol) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) {
    throw std::invalid_argument("bisect: endpoints do not bracket a sign change");
  }
  const double eps = std::numeric_limits<double>::epsilon();
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double width = hi - lo;
    if (width <= rel_tol * std::abs(mid) || width <= 4.0 * eps * std::abs(mid) ||
        mid == lo || mid == hi) {
      return mid;
    }
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace townsend
