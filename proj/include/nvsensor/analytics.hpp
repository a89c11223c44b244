#pragma once

#include "nvsensor/protocol.hpp"

// Closed-form counterparts of the simulator. Everything here is evaluated
// from formulas only — none of these functions touch the density-matrix
// engine, so agreement between the two is a real cross-check.
namespace nvsensor::analytics {

// Signal visibility C in p_click = 1/2 - (C/2) sin(theta):
// (1-eps)^{2N+1} times the per-segment dephasing factor to the Nth power
// (e^{-alpha^2} quasi-static, e^{-alpha sqrt(N)} Markovian, 1 for none).
double coherence_prefactor(const SensorParams& p);

// Binomial error propagation: sqrt(P(1-P)/M) / |dP/domega|.
double shot_noise_uncertainty(double p, double dp_domega, long m);

// Full finite-phase uncertainty of the hybrid estimate,
//   sqrt(1 - C^2 sin^2 theta) / (sqrt(M) C |cos theta| alpha sqrt(N) T2e)
// with theta = alpha sqrt(N) omega T2e. For quasi-static noise and
// eps = 0 this is exactly e^{alpha^2}/alpha * 1/sqrt(M)
// * sqrt(1 - e^{-2 alpha^2} sin^2 theta) / (sqrt(N) T2e |cos theta|).
double hybrid_uncertainty(const SensorParams& p);

// Small-phase (omega -> 0) limit including gate error:
// e^{alpha^2} / ((1-eps)^{2N+1} alpha sqrt(MN) T2e) for quasi-static noise,
// with the dephasing exponent swapped per noise kind.
double gate_error_uncertainty(const SensorParams& p);

// Best conventional Ramsey uncertainty under quasi-static dephasing,
// attained at t = T2e/sqrt(2): sqrt(2) e^{1/2} / (sqrt(M) T2e).
double conventional_uncertainty_opt(double t2e, long m);

struct ConventionalOptimum {
  double delta_omega = 0.0;
  double t_opt = 0.0;  // exposure time attaining it
};

// Same, dispatched on the dephasing law: quasi-static gives the value
// above; Markovian gives e / (sqrt(M) T2e) at t = T2e.
ConventionalOptimum conventional_optimum(NoiseModel::Kind kind, double t2e,
                                         long m);

struct AlphaOptimum {
  double alpha_star = 0.0;
  double delta_omega = 0.0;
};

// Numeric golden-section minimization of the small-phase uncertainty over
// alpha at fixed (noise kind, N, M, T2e, eps). Quasi-static lands on
// alpha = 1/sqrt(2) regardless of N; Markovian lands on alpha = 1/sqrt(N),
// whose value e/(sqrt(M) T2e) is N-independent — segmenting buys nothing
// against memoryless noise.
AlphaOptimum minimize_over_alpha(const SensorParams& p);

struct FlipProbability {
  double exact = 0.0;
  double approx = 0.0;     // leading order in k = t/T2
  double abs_error = 0.0;  // |exact - approx|
};

// Effective phase-flip probability after free evolution of duration t:
// (1 - e^{-k})/2 ~ k/2 (Markovian), (1 - e^{-k^2})/2 ~ k^2/2 (quasi-static).
FlipProbability flip_probability(const NoiseModel& noise, double t);

struct ZenoSurvival {
  double product_form = 0.0;  // (1 - Gamma^2 tau^2)^N, tau = t/N
  double first_order = 0.0;   // 1 - Gamma^2 t^2 / N
};

// Survival probability of a quadratically decaying state probed N times
// within total time t; slicing suppresses the decay by 1/N.
ZenoSurvival zeno_survival(double gamma, double t, int n);

struct TimeBudget {
  double t_cycle_hybrid = 0.0;
  double t_cycle_conv = 0.0;
  double tau_p = 0.0;
  double tau_w = 0.0;
  double tau_m = 0.0;
  bool degenerate = false;  // hybrid cycle time is zero
};

// Leading-order cycle times: hybrid N * tau_w (the inter-segment waits
// dominate); conventional tau_p + T2e/sqrt(2) + tau_m. With `extended`
// the hybrid cycle also counts the N free-evolution segments.
TimeBudget time_budget(const SensorParams& p, double tau_p, double tau_w,
                       double tau_m, bool extended = false);

// Relative sensitivity r = |conventional opt| / |hybrid| in the
// small-phase regime: sqrt(2) e^{1/2} (1-eps)^{2N+1} e^{-alpha^2}
// alpha sqrt(N). r > 1 means the hybrid scheme wins.
double relative_sensitivity(double epsilon, long n, double alpha);

struct SensitivityReport {
  double delta_omega = 0.0;       // hybrid scheme
  double delta_omega_conv = 0.0;  // conventional optimum, same noise law
  double ratio_r = 0.0;           // delta_omega_conv / delta_omega
  bool small_phase = false;       // |theta| small enough for the limit form
  bool phase_wrap = false;
};

enum class ReportMode { FixedShots, FixedTotalTime };

// FixedShots compares both schemes at the same M (the headline figure of
// merit). FixedTotalTime instead normalizes each scheme by its cycle time
// (uncertainties become rad/s per sqrt(s) of averaging); requires a
// non-degenerate budget.
SensitivityReport sensitivity_report(const SensorParams& p,
                                     ReportMode mode = ReportMode::FixedShots,
                                     const TimeBudget* budget = nullptr);

}  // namespace nvsensor::analytics
