#pragma once

#include <array>
#include <cmath>
#include <functional>

#include "error.hpp"
#include "linalg.hpp"

namespace schromax {

/// Third-order interpolating kernel, support [-2, 2].
inline double beta3(double x) {
  const double a = std::abs(x);
  if (a <= 1.0) return 1.0 - 2.5 * a * a + 1.5 * a * a * a;
  if (a <= 2.0) return 0.5 * (2.0 - a) * (2.0 - a) * (1.0 - a);
  return 0.0;
}

/// C^2 extension of exp(-|p|) across (-1, 0). Polynomial coefficients a0..a5.
inline std::array<double, 6> g_poly_coeffs() {
  const double e = std::exp(-1.0);
  return {1.0, -1.0, 0.5, 17.5 - 14.5 * e, 24.5 - 23.0 * e, 9.5 - 9.5 * e};
}

/// k-th derivative of the junction polynomial at p.
inline double g_poly(double p, int deriv = 0) {
  const auto a = g_poly_coeffs();
  double s = 0;
  for (int i = deriv; i < 6; ++i) {
    double c = a[i];
    for (int k = 0; k < deriv; ++k) c *= (i - k);
    s += c * std::pow(p, i - deriv);
  }
  return s;
}

/// k-th derivative of exp(-|p|) on the branch containing p (p >= 0 or p <= -1).
inline double g_exp(double p, int deriv = 0) {
  if (p >= 0) return (deriv % 2 ? -1.0 : 1.0) * std::exp(-p);
  return std::exp(p);
}

inline double g_extension(double p) {
  if (p > -1.0 && p < 0.0) return g_poly(p);
  return std::exp(-std::abs(p));
}

/// Kernel pair (beta, order r) used for the discrete delta function.
struct Kernels {
  std::function<double(double)> beta = beta3;
  int support = 2;  // beta vanishes for |x| >= support
  int order = 3;
  std::function<double(double)> g = g_extension;

  double delta_h(double s, double ds) const { return beta(s / ds) / ds; }
};

}  // namespace schromax
