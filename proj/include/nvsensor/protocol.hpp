#pragma once

#include <cstdint>
#include <json.hpp>

#include "nvsensor/density_matrix.hpp"
#include "nvsensor/noise.hpp"

namespace nvsensor {

// Everything that defines one sensing experiment. The hybrid sequence
// splits the exposure into N segments of duration (alpha/sqrt(N))*T2e so
// the total accumulated phase is alpha*sqrt(N)*omega*T2e.
struct SensorParams {
  double t2e = 1.0;          // electron dephasing time [s]
  double omega = 0.0;        // frequency shift to estimate [rad/s]
  int n_transfers = 1;       // N, number of phase-transfer segments
  double alpha = M_SQRT1_2;  // dimensionless exposure parameter
  long shots = 10000;        // M, measurement repetitions per estimate
  double gate_epsilon = 0.0; // depolarizing error per two-qubit gate
  NoiseModel::Kind noise_kind = NoiseModel::Kind::QuasiStatic;

  NoiseModel noise() const { return {noise_kind, t2e}; }
  double segment_time() const;  // (alpha / sqrt(N)) * T2e
  double total_phase() const;   // alpha * sqrt(N) * omega * T2e
  // The arcsin inversion is single-valued only for |phase| < pi/2;
  // beyond that an estimate would alias. Flagged, not fatal.
  bool phase_wrapped() const;
  void validate() const;  // throws std::invalid_argument
};

struct ProtocolOutcome {
  double p_click = 0.5;          // probability of the sigma_y = +1 outcome
  double coherence = 0.0;        // |electron off-diagonal| of final_state
  double accumulated_phase = 0;  // rad
  bool phase_wrap = false;
  DensityMatrix final_state = DensityMatrix::ground(2);  // pre-measurement
};

// Plain Ramsey run on a bare electron qubit: prepare |+>, accumulate
// phase omega * t_expose under dephasing, read out along sigma_y. With
// quasi-static noise, p_click = 1/2 - 1/2 e^{-(t/T2)^2} sin(omega t).
ProtocolOutcome run_conventional(const SensorParams& params, double t_expose);

// Full hybrid sequence in exact-channel mode: RotY(pi/2) on the nuclear
// spin, then N blocks of {CNOT, free evolution + dephasing, CNOT}, a final
// SWAP, with a depolarizing channel after every two-qubit gate. The
// returned final_state is the post-SWAP, pre-measurement density matrix;
// p_click = 1/2 - 1/2 (1-eps)^{2N+1} f_seg^N sin(alpha sqrt(N) omega T2e).
ProtocolOutcome run_hybrid_exact(const SensorParams& params);

struct TrajectoryOutcome {
  long clicks = 0;
  long shots = 0;
  double p_click = 0.0;    // clicks / shots
  double std_error = 0.0;  // binomial standard error of p_click
};

// Monte Carlo pure-state unraveling of the hybrid sequence. Quasi-static
// dephasing becomes an independent Gaussian detuning per segment with
// sigma_delta = sqrt(2)/T2e; Markovian dephasing becomes a phase-flip
// with probability (1 - e^{-t/T2})/2 per segment; gate error replaces the
// state with a uniformly random basis state. Deterministic given the seed.
TrajectoryOutcome run_hybrid_trajectories(const SensorParams& params,
                                          long shots, std::uint64_t seed);

// Ordered pulse listing of the hybrid sequence: one nuclear RotY, then per
// segment CNOT/wait/CNOT, SWAP, electron RotX, measurement. Array entries
// carry {op, qubits, duration_s, noisy} (rotations also carry the angle).
nlohmann::json transcript(const SensorParams& params);

}  // namespace nvsensor
