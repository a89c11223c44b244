#pragma once

#include <cmath>

namespace nvsensor {

// Golden-section search for the minimizer of a unimodal function on
// [lo, hi]. Returns the midpoint of the final bracket.
template <typename F>
double golden_min(F&& f, double lo, double hi, double tol = 1e-10) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

// One parabolic-interpolation refinement of a minimizer estimate: fits a
// parabola through f at x0 - h, x0, x0 + h and returns its vertex. Used to
// push a golden-section bracket below the sqrt(machine-eps) plateau.
template <typename F>
double parabolic_refine(F&& f, double x0, double h) {
  const double fm = f(x0 - h);
  const double f0 = f(x0);
  const double fp = f(x0 + h);
  const double denom = fm - 2.0 * f0 + fp;
  if (!(denom > 0.0)) return x0;  // no curvature signal; keep the estimate
  return x0 + 0.5 * h * (fm - fp) / denom;
}

}  // namespace nvsensor
