#include "nvsensor/analytics.hpp"

#include <cmath>
#include <stdexcept>

#include "nvsensor/errors.hpp"
#include "nvsensor/golden.hpp"

namespace nvsensor::analytics {
namespace {

// Exponent of the accumulated dephasing over the N segments.
double dephasing_exponent(NoiseModel::Kind kind, int n, double alpha) {
  switch (kind) {
    case NoiseModel::Kind::None:
      return 0.0;
    case NoiseModel::Kind::Markovian:
      return alpha * std::sqrt(double(n));
    case NoiseModel::Kind::QuasiStatic:
      return alpha * alpha;
  }
  throw std::logic_error("unreachable noise kind");
}

double gate_prefactor(double epsilon, long n) {
  return std::pow(1.0 - epsilon, 2.0 * double(n) + 1.0);
}

}  // namespace

double coherence_prefactor(const SensorParams& p) {
  p.validate();
  return gate_prefactor(p.gate_epsilon, p.n_transfers) *
         std::exp(-dephasing_exponent(p.noise_kind, p.n_transfers, p.alpha));
}

double shot_noise_uncertainty(double p, double dp_domega, long m) {
  if (m < 1) throw std::invalid_argument("M must be >= 1");
  if (!(p > 0.0 && p < 1.0)) {
    throw DegenerateEstimator("probability at the boundary: no binomial spread");
  }
  if (dp_domega == 0.0) {
    throw DegenerateEstimator("signal slope vanishes");
  }
  return std::sqrt(p * (1.0 - p) / double(m)) / std::abs(dp_domega);
}

double hybrid_uncertainty(const SensorParams& p) {
  p.validate();
  const double c = coherence_prefactor(p);
  if (c == 0.0) throw DegenerateEstimator("zero visibility");
  const double theta = p.total_phase();
  const double cos_t = std::cos(theta);
  // cos of a double never lands exactly on zero, so gate on a band around
  // the extremum instead; inside it the propagated uncertainty exceeds the
  // optimum by nine orders of magnitude and the estimator is useless.
  if (std::abs(cos_t) < 1e-9) {
    throw DivergentUncertainty("working point at a fringe extremum");
  }
  const double sin_t = std::sin(theta);
  const double spread = std::sqrt(1.0 - c * c * sin_t * sin_t);
  return spread / (std::sqrt(double(p.shots)) * c * std::abs(cos_t) *
                   p.alpha * std::sqrt(double(p.n_transfers)) * p.t2e);
}

double gate_error_uncertainty(const SensorParams& p) {
  p.validate();
  if (p.gate_epsilon >= 1.0) {
    throw DegenerateEstimator("fully depolarizing gates carry no signal");
  }
  const double c = coherence_prefactor(p);
  return 1.0 / (c * p.alpha *
                std::sqrt(double(p.shots) * double(p.n_transfers)) * p.t2e);
}

double conventional_uncertainty_opt(double t2e, long m) {
  if (!(t2e > 0.0)) throw std::invalid_argument("T2e must be positive");
  if (m < 1) throw std::invalid_argument("M must be >= 1");
  return std::sqrt(2.0) * std::exp(0.5) / (std::sqrt(double(m)) * t2e);
}

ConventionalOptimum conventional_optimum(NoiseModel::Kind kind, double t2e,
                                         long m) {
  if (!(t2e > 0.0)) throw std::invalid_argument("T2e must be positive");
  if (m < 1) throw std::invalid_argument("M must be >= 1");
  switch (kind) {
    case NoiseModel::Kind::QuasiStatic:
      // min over t of e^{(t/T2)^2} / t, at t = T2/sqrt(2)
      return {conventional_uncertainty_opt(t2e, m), t2e * M_SQRT1_2};
    case NoiseModel::Kind::Markovian:
      // min over t of e^{t/T2} / t, at t = T2
      return {std::exp(1.0) / (std::sqrt(double(m)) * t2e), t2e};
    case NoiseModel::Kind::None:
      throw std::invalid_argument(
          "no dephasing: conventional uncertainty has no optimum "
          "(improves without bound as t grows)");
  }
  throw std::logic_error("unreachable noise kind");
}

AlphaOptimum minimize_over_alpha(const SensorParams& p) {
  p.validate();
  SensorParams q = p;
  const auto objective = [&q](double alpha) {
    q.alpha = alpha;
    return std::log(gate_error_uncertainty(q));
  };
  // The minimizer sits at 1/sqrt(2) (quasi-static) or 1/sqrt(N)
  // (Markovian); bracket both comfortably.
  const double lo = 0.05 / std::sqrt(double(p.n_transfers));
  const double hi = 8.0;
  double alpha = golden_min(objective, lo, hi, 1e-7);
  // Two parabolic polish rounds push past golden section's sqrt(eps)
  // resolution floor.
  alpha = parabolic_refine(objective, alpha, 1e-4 * alpha);
  alpha = parabolic_refine(objective, alpha, 2e-5 * alpha);
  q.alpha = alpha;
  return {alpha, gate_error_uncertainty(q)};
}

FlipProbability flip_probability(const NoiseModel& noise, double t) {
  if (t < 0.0) throw std::invalid_argument("negative evolution time");
  FlipProbability out;
  if (noise.kind == NoiseModel::Kind::None) return out;
  if (!(noise.t2 > 0.0)) throw std::invalid_argument("T2 must be positive");
  const double k = t / noise.t2;
  if (noise.kind == NoiseModel::Kind::Markovian) {
    out.exact = 0.5 * (1.0 - std::exp(-k));
    out.approx = 0.5 * k;
  } else {
    out.exact = 0.5 * (1.0 - std::exp(-k * k));
    out.approx = 0.5 * k * k;
  }
  out.abs_error = std::abs(out.exact - out.approx);
  return out;
}

ZenoSurvival zeno_survival(double gamma, double t, int n) {
  if (gamma < 0.0 || t < 0.0) {
    throw std::invalid_argument("rate and time must be non-negative");
  }
  if (n < 1) throw std::invalid_argument("segment count must be >= 1");
  const double gamma_tau = gamma * t / double(n);
  if (gamma_tau >= 1.0) {
    throw ApproximationInvalid(
        "per-segment decay not small: product form leaves [0, 1]");
  }
  ZenoSurvival out;
  out.product_form = std::pow(1.0 - gamma_tau * gamma_tau, double(n));
  out.first_order = 1.0 - gamma * gamma * t * t / double(n);
  return out;
}

TimeBudget time_budget(const SensorParams& p, double tau_p, double tau_w,
                       double tau_m, bool extended) {
  p.validate();
  if (tau_p < 0.0 || tau_w < 0.0 || tau_m < 0.0) {
    throw std::invalid_argument("negative duration");
  }
  TimeBudget b;
  b.tau_p = tau_p;
  b.tau_w = tau_w;
  b.tau_m = tau_m;
  b.t_cycle_hybrid = double(p.n_transfers) * tau_w;
  if (extended) {
    b.t_cycle_hybrid += double(p.n_transfers) * p.segment_time();
  }
  b.t_cycle_conv = tau_p + p.t2e * M_SQRT1_2 + tau_m;
  b.degenerate = b.t_cycle_hybrid == 0.0;
  return b;
}

double relative_sensitivity(double epsilon, long n, double alpha) {
  if (!(epsilon >= 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("gate error must lie in [0, 1)");
  }
  if (n < 1) throw std::invalid_argument("N must be >= 1");
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  return std::sqrt(2.0) * std::exp(0.5) * gate_prefactor(epsilon, n) *
         std::exp(-alpha * alpha) * alpha * std::sqrt(double(n));
}

SensitivityReport sensitivity_report(const SensorParams& p, ReportMode mode,
                                     const TimeBudget* budget) {
  p.validate();
  SensitivityReport r;
  r.phase_wrap = p.phase_wrapped();
  r.small_phase = std::abs(p.total_phase()) < 1e-3;
  r.delta_omega = hybrid_uncertainty(p);
  r.delta_omega_conv =
      conventional_optimum(p.noise_kind, p.t2e, p.shots).delta_omega;
  if (mode == ReportMode::FixedTotalTime) {
    if (budget == nullptr) {
      throw std::invalid_argument("fixed-time mode needs a time budget");
    }
    if (budget->degenerate) {
      throw std::invalid_argument("degenerate budget: hybrid cycle time 0");
    }
    // Normalize each scheme by the time its M cycles actually take:
    // delta_omega * sqrt(M * t_cycle) is M-independent (rad/s per sqrt s).
    const double m = double(p.shots);
    r.delta_omega *= std::sqrt(m * budget->t_cycle_hybrid);
    r.delta_omega_conv *= std::sqrt(m * budget->t_cycle_conv);
  }
  r.ratio_r = r.delta_omega_conv / r.delta_omega;
  return r;
}

}  // namespace nvsensor::analytics
