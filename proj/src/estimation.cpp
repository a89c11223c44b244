#include "nvsensor/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "nvsensor/analytics.hpp"
#include "nvsensor/errors.hpp"
#include "nvsensor/parallel.hpp"
#include "nvsensor/rng.hpp"

namespace nvsensor {

EstimateResult estimate_omega(double p_hat, const SensorParams& params) {
  params.validate();
  if (!(p_hat >= 0.0 && p_hat <= 1.0)) {
    throw std::invalid_argument("probability outside [0, 1]");
  }
  const double c = analytics::coherence_prefactor(params);
  if (c == 0.0) {
    throw DegenerateEstimator("zero visibility: p carries no signal");
  }
  const double raw = (1.0 - 2.0 * p_hat) / c;
  const double s = std::clamp(raw, -1.0, 1.0);
  EstimateResult r;
  r.clamped = raw != s;
  r.omega_hat = std::asin(s) /
                (params.alpha * std::sqrt(double(params.n_transfers)) *
                 params.t2e);
  return r;
}

EstimationRun run_estimation(EstimationRun run) {
  run.params.validate();
  if (run.repetitions < 2) {
    throw std::invalid_argument("need at least 2 repetitions for a spread");
  }

  const double p_exact = run_hybrid_exact(run.params).p_click;
  const long m = run.params.shots;

  run.estimates.assign(run.repetitions, 0.0);
  std::vector<unsigned char> clamped(run.repetitions, 0);
  parallel_for(run.repetitions, [&](std::size_t rep) {
    Rng rng(derive_seed(run.seed, rep));
    long clicks = 0;
    for (long s = 0; s < m; ++s) {
      if (rng.bernoulli(p_exact)) ++clicks;
    }
    const EstimateResult est =
        estimate_omega(double(clicks) / double(m), run.params);
    run.estimates[rep] = est.omega_hat;
    clamped[rep] = est.clamped ? 1 : 0;
  });

  run.clamp_count = std::count(clamped.begin(), clamped.end(), 1);
  const double n = double(run.repetitions);
  run.mean_estimate =
      std::accumulate(run.estimates.begin(), run.estimates.end(), 0.0) / n;
  double ss = 0.0;
  for (double e : run.estimates) {
    const double d = e - run.mean_estimate;
    ss += d * d;
  }
  run.empirical_std = std::sqrt(ss / (n - 1.0));
  run.analytic_std = analytics::hybrid_uncertainty(run.params);
  return run;
}

std::vector<SweepRow> sweep_n(const SensorParams& base,
                              const std::vector<int>& n_list,
                              int repetitions, std::uint64_t seed) {
  if (n_list.empty()) throw std::invalid_argument("empty N list");
  const double conv_opt =
      analytics::conventional_uncertainty_opt(base.t2e, base.shots);

  std::vector<SweepRow> rows;
  rows.reserve(n_list.size() + 1);

  // Conventional baseline: optimal-exposure Ramsey, no entangling gates.
  {
    SensorParams conv = base;
    conv.n_transfers = 1;
    conv.alpha = M_SQRT1_2;
    conv.gate_epsilon = 0.0;
    conv.noise_kind = NoiseModel::Kind::QuasiStatic;
    EstimationRun r;
    r.params = conv;
    r.repetitions = repetitions;
    r.seed = derive_seed(seed, 0);
    r = run_estimation(std::move(r));
    rows.push_back({"conventional", 1, conv.alpha, r.analytic_std,
                    r.empirical_std, conv_opt / r.analytic_std});
  }

  for (std::size_t i = 0; i < n_list.size(); ++i) {
    SensorParams p = base;
    p.n_transfers = n_list[i];
    EstimationRun r;
    r.params = p;
    r.repetitions = repetitions;
    r.seed = derive_seed(seed, i + 1);
    r = run_estimation(std::move(r));
    rows.push_back({"hybrid", n_list[i], p.alpha, r.analytic_std,
                    r.empirical_std, conv_opt / r.analytic_std});
  }
  return rows;
}

}  // namespace nvsensor
