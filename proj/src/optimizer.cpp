#include "nvsensor/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nvsensor/analytics.hpp"
#include "nvsensor/golden.hpp"
#include "nvsensor/parallel.hpp"

namespace nvsensor::optimizer {
namespace {

constexpr double kAlphaStar = M_SQRT1_2;
constexpr long kExhaustiveLimit = 1000;

// Envelope after the analytic alpha optimization: r at alpha* equals
// (1-eps)^{2N+1} sqrt(N) because sqrt(2) e^{1/2} e^{-1/2} / sqrt(2) = 1.
double log_envelope(double epsilon, double n) {
  return (2.0 * n + 1.0) * std::log1p(-epsilon) + 0.5 * std::log(n);
}

long best_integer_n(double epsilon, long n_max) {
  if (epsilon == 0.0) return n_max;  // sqrt(N) grows without bound

  long lo = 1;
  long hi = n_max;
  if (n_max > kExhaustiveLimit) {
    // Continuous optimum of the strictly log-concave envelope.
    const double n_c = -1.0 / (4.0 * std::log1p(-epsilon));
    if (n_c < double(kExhaustiveLimit) / 2.0) {
      hi = kExhaustiveLimit;
    } else if (n_c >= double(n_max)) {
      return n_max;
    } else {
      // Golden-section around the continuous optimum, then compare the
      // bracketing integers.
      const double n_cont = golden_min(
          [epsilon](double n) { return -log_envelope(epsilon, n); }, 1.0,
          double(n_max), 1e-3);
      const long n_lo = std::clamp(long(std::floor(n_cont)), 1L, n_max);
      const long n_hi = std::min(n_lo + 1, n_max);
      return log_envelope(epsilon, double(n_lo)) >=
                     log_envelope(epsilon, double(n_hi))
                 ? n_lo
                 : n_hi;
    }
  }

  long best = lo;
  double best_val = log_envelope(epsilon, double(lo));
  for (long n = lo + 1; n <= hi; ++n) {
    const double val = log_envelope(epsilon, double(n));
    if (val > best_val) {  // strict: ties keep the smaller N
      best_val = val;
      best = n;
    }
  }
  return best;
}

}  // namespace

OptimizationResult optimize_r(double epsilon, long n_max) {
  if (!(epsilon >= 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("gate error must lie in [0, 1)");
  }
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");

  OptimizationResult res;
  res.epsilon = epsilon;
  res.alpha_star = kAlphaStar;
  res.n_star = best_integer_n(epsilon, n_max);
  res.capped = res.n_star == n_max;
  res.r_star = analytics::relative_sensitivity(epsilon, res.n_star,
                                               kAlphaStar);
  return res;
}

double breakeven_epsilon(long n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (n_max == 1) return 0.0;  // r = (1-eps)^3 never exceeds 1

  // r* decreases monotonically in eps; bracket the unit crossing.
  double lo = 1e-4;   // r* well above 1 here
  double hi = 0.5;    // r* well below 1 here
  for (int it = 0; it < 60 && hi - lo > 1e-5; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (optimize_r(mid, n_max).r_star > 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> log_grid(double lo, double hi, int points) {
  if (!(lo > 0.0 && hi > lo)) {
    throw std::invalid_argument("need 0 < lo < hi for a log grid");
  }
  if (points < 2) throw std::invalid_argument("need at least 2 points");
  std::vector<double> grid(points);
  const double step = std::log(hi / lo) / double(points - 1);
  for (int i = 0; i < points; ++i) {
    grid[i] = lo * std::exp(step * double(i));
  }
  grid.back() = hi;  // pin the endpoint against rounding
  return grid;
}

std::vector<OptimizationResult> figure3_sweep(
    const std::vector<double>& eps_grid, long n_max) {
  if (eps_grid.empty()) throw std::invalid_argument("empty grid");
  if (!std::is_sorted(eps_grid.begin(), eps_grid.end())) {
    throw std::invalid_argument("grid must be ascending");
  }
  std::vector<OptimizationResult> rows(eps_grid.size());
  parallel_for(eps_grid.size(), [&](std::size_t i) {
    rows[i] = optimize_r(eps_grid[i], n_max);
  });
  return rows;
}

}  // namespace nvsensor::optimizer
