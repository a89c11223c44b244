#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nvsensor/protocol.hpp"

namespace nvsensor {

struct EstimateResult {
  double omega_hat = 0.0;
  bool clamped = false;  // |(1-2p)/C| exceeded 1 and was clipped
};

// Inverts p = 1/2 - (C/2) sin(alpha sqrt(N) omega T2e) on the principal
// arcsin branch, with the visibility C assumed known from the parameters.
// Statistical overshoots of |(1-2p)/C| past 1 are clamped and flagged.
EstimateResult estimate_omega(double p_hat, const SensorParams& params);

struct EstimationRun {
  SensorParams params;       // params.shots is M, the shots per estimate
  int repetitions = 0;
  std::uint64_t seed = 0;

  // Filled by run_estimation:
  std::vector<double> estimates;
  long clamp_count = 0;
  double mean_estimate = 0.0;
  double empirical_std = 0.0;  // sample std, n-1 denominator
  double analytic_std = 0.0;   // error-propagation prediction
};

// For each repetition, draws M Bernoulli shots at the exact-channel
// p_click, inverts the empirical frequency to an estimate, and compares
// the spread of the estimates with the analytic uncertainty. Repetitions
// run in parallel on per-repetition derived seeds, so results are
// identical regardless of thread count.
EstimationRun run_estimation(EstimationRun run);

struct SweepRow {
  std::string scheme;  // "hybrid" or "conventional"
  int n = 0;
  double alpha = 0.0;
  double delta_omega_analytic = 0.0;
  double delta_omega_empirical = 0.0;
  double ratio_r = 0.0;  // conventional optimum / analytic
};

// Estimation sweep over transfer counts at fixed M, prepended with the
// conventional baseline (a single optimal-exposure Ramsey run, realized
// as N = 1, alpha = 1/sqrt(2), no gate error).
std::vector<SweepRow> sweep_n(const SensorParams& base,
                              const std::vector<int>& n_list,
                              int repetitions, std::uint64_t seed);

}  // namespace nvsensor
