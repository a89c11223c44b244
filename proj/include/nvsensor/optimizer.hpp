#pragma once

#include <vector>

namespace nvsensor::optimizer {

struct OptimizationResult {
  double epsilon = 0.0;
  long n_star = 1;
  double alpha_star = 0.0;
  double r_star = 0.0;
  bool capped = false;  // the N search hit n_max
};

// Maximizes the relative sensitivity r(eps, N, alpha) over alpha > 0 and
// integer N in [1, n_max]. The alpha optimum is 1/sqrt(2) independent of
// (eps, N), which reduces the objective to the envelope
// (1-eps)^{2N+1} sqrt(N): searched exhaustively for small N, by
// golden-section on the (strictly log-concave) continuous relaxation plus
// an integer neighbor check for large N. Ties break toward smaller N.
OptimizationResult optimize_r(double epsilon, long n_max = 100000);

// Gate error at which the optimized hybrid scheme stops beating the
// conventional one: bisection on r*(eps) = 1 to 1e-5.
double breakeven_epsilon(long n_max = 100000);

// Geometric grid from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, int points);

// r*, N*, alpha* per grid point; rows in grid order.
std::vector<OptimizationResult> figure3_sweep(const std::vector<double>& eps_grid,
                                              long n_max = 100000);

}  // namespace nvsensor::optimizer
