#include "nvsensor/protocol.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "nvsensor/gates.hpp"
#include "nvsensor/rng.hpp"

namespace nvsensor {
namespace {

using std::complex;
const complex<double> kI(0.0, 1.0);

// Free precession: |1>_e picks up e^{-i phase} relative to |0>_e.
DensityMatrix electron_phase(const DensityMatrix& rho, double phase) {
  const complex<double> ph = std::exp(-kI * phase);
  Eigen::MatrixXcd m = rho.matrix();
  if (rho.dim() == 2) {
    m(1, 0) *= ph;
    m(0, 1) *= std::conj(ph);
    return DensityMatrix(std::move(m));
  }
  for (int j = 0; j < 4; ++j) {
    m(2, j) *= ph;
    m(3, j) *= ph;
  }
  for (int i = 0; i < 4; ++i) {
    m(i, 2) *= std::conj(ph);
    m(i, 3) *= std::conj(ph);
  }
  return DensityMatrix(std::move(m));
}

}  // namespace

double SensorParams::segment_time() const {
  return alpha / std::sqrt(double(n_transfers)) * t2e;
}

double SensorParams::total_phase() const {
  return alpha * std::sqrt(double(n_transfers)) * omega * t2e;
}

bool SensorParams::phase_wrapped() const {
  return std::abs(total_phase()) >= M_PI / 2.0;
}

void SensorParams::validate() const {
  if (!(t2e > 0.0)) throw std::invalid_argument("T2e must be positive");
  if (n_transfers < 1) throw std::invalid_argument("N must be >= 1");
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  if (shots < 1) throw std::invalid_argument("M must be >= 1");
  if (!(gate_epsilon >= 0.0 && gate_epsilon <= 1.0)) {
    throw std::invalid_argument("gate error must lie in [0, 1]");
  }
  if (!std::isfinite(omega)) throw std::invalid_argument("omega not finite");
}

ProtocolOutcome run_conventional(const SensorParams& params, double t_expose) {
  params.validate();
  if (t_expose < 0.0) throw std::invalid_argument("negative exposure time");

  DensityMatrix rho = DensityMatrix::ground(2);
  rho = apply_gate(rho, GateOp::rot_y(0, M_PI / 2.0));
  rho = electron_phase(rho, params.omega * t_expose);
  rho = apply_dephasing(rho, params.noise(), t_expose);

  ProtocolOutcome out;
  out.accumulated_phase = params.omega * t_expose;
  out.phase_wrap = std::abs(out.accumulated_phase) >= M_PI / 2.0;
  out.coherence = std::abs(rho(0, 1));
  out.p_click = measure_basis(rho, 0, MeasureBasis::Y).p1;
  out.final_state = std::move(rho);
  return out;
}

ProtocolOutcome run_hybrid_exact(const SensorParams& params) {
  params.validate();
  const double tau = params.segment_time();
  const double phase_per_segment = params.omega * tau;
  const NoiseModel noise = params.noise();
  const GateNoise gn{params.gate_epsilon};

  DensityMatrix rho = DensityMatrix::ground(4);
  rho = apply_gate(rho, GateOp::rot_y(1, M_PI / 2.0));
  for (int seg = 0; seg < params.n_transfers; ++seg) {
    rho = apply_depolarizing(apply_gate(rho, GateOp::cnot()), gn);
    rho = electron_phase(rho, phase_per_segment);
    rho = apply_dephasing(rho, noise, tau);
    rho = apply_depolarizing(apply_gate(rho, GateOp::cnot()), gn);
  }
  rho = apply_depolarizing(apply_gate(rho, GateOp::swap()), gn);

  ProtocolOutcome out;
  out.accumulated_phase = params.total_phase();
  out.phase_wrap = params.phase_wrapped();
  out.coherence = std::abs(rho(0, 2));
  out.p_click = measure_basis(rho, 0, MeasureBasis::Y).p1;
  out.final_state = std::move(rho);
  return out;
}

TrajectoryOutcome run_hybrid_trajectories(const SensorParams& params,
                                          long shots, std::uint64_t seed) {
  params.validate();
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");

  const double tau = params.segment_time();
  const double sigma_delta = std::sqrt(2.0) / params.t2e;
  const double p_flip =
      params.noise_kind == NoiseModel::Kind::Markovian
          ? 0.5 * (1.0 - std::exp(-tau / params.t2e))
          : 0.0;
  const bool quasi_static =
      params.noise_kind == NoiseModel::Kind::QuasiStatic;

  // Fixed 4-vectors; the whole sequence is permutations and phases.
  const Eigen::Matrix4cd u_prep = GateOp::rot_y(1, M_PI / 2.0).unitary(4);

  Rng rng(seed);
  long clicks = 0;
  for (long shot = 0; shot < shots; ++shot) {
    Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
    psi(0) = 1.0;
    psi = u_prep * psi;

    auto depolarize = [&]() {
      if (params.gate_epsilon > 0.0 && rng.bernoulli(params.gate_epsilon)) {
        psi.setZero();
        psi(rng.uniform_pow2(4)) = 1.0;
      }
    };
    auto cnot = [&]() { std::swap(psi(1), psi(3)); };

    for (int seg = 0; seg < params.n_transfers; ++seg) {
      cnot();
      depolarize();
      const double delta = quasi_static ? sigma_delta * rng.gaussian() : 0.0;
      const complex<double> ph =
          std::exp(-kI * ((params.omega + delta) * tau));
      psi(2) *= ph;
      psi(3) *= ph;
      if (p_flip > 0.0 && rng.bernoulli(p_flip)) {
        psi(2) = -psi(2);
        psi(3) = -psi(3);
      }
      cnot();
      depolarize();
    }
    std::swap(psi(1), psi(2));  // SWAP gate
    depolarize();

    // P(sigma_y = +1) on the electron, summed over the nuclear spin:
    // <1_y| = (<0| - i<1|)/sqrt(2).
    const complex<double> a0 = (psi(0) - kI * psi(2)) * M_SQRT1_2;
    const complex<double> a1 = (psi(1) - kI * psi(3)) * M_SQRT1_2;
    const double p1y = std::norm(a0) + std::norm(a1);
    if (rng.bernoulli(p1y)) ++clicks;
  }

  TrajectoryOutcome out;
  out.clicks = clicks;
  out.shots = shots;
  out.p_click = double(clicks) / double(shots);
  out.std_error =
      std::sqrt(std::max(out.p_click * (1.0 - out.p_click), 0.0) /
                double(shots));
  return out;
}

nlohmann::json transcript(const SensorParams& params) {
  params.validate();
  const double tau = params.segment_time();
  nlohmann::json seq = nlohmann::json::array();
  auto push = [&seq](const char* op, const std::vector<int>& qubits,
                     double duration, bool noisy) {
    seq.push_back({{"op", op},
                   {"qubits", qubits},
                   {"duration_s", duration},
                   {"noisy", noisy}});
  };
  push("ry", {1}, 0.0, false);
  seq.back()["angle_rad"] = M_PI / 2.0;
  for (int seg = 0; seg < params.n_transfers; ++seg) {
    push("cnot", {1, 0}, 0.0, true);  // control first, then target
    push("wait", {0, 1}, tau, false);
    push("cnot", {1, 0}, 0.0, true);
  }
  push("swap", {0, 1}, 0.0, true);
  push("rx", {0}, 0.0, false);
  seq.back()["angle_rad"] = M_PI / 2.0;
  push("measure", {0}, 0.0, false);
  seq.back()["basis"] = "z";
  return seq;
}

}  // namespace nvsensor
