#pragma once

#include <Eigen/Dense>
#include <complex>

#include "nvsensor/constants.hpp"

namespace nvsensor {

using Matrix6cd = Eigen::Matrix<std::complex<double>, 6, 6>;
using Vector6cd = Eigen::Matrix<std::complex<double>, 6, 1>;
using Eigen::Matrix4cd;
using Eigen::Vector4cd;

// Full spin-1 (x) spin-1/2 Hamiltonian on the 6-dim product space:
//   D Sz^2 + g_e mu_B (B_ex+B) Sz + A Sz (x) sz
//   + (A_perp/2) (S+ (x) s- + S- (x) s+) + g_n mu_B (B_ex+B) sz
// Basis: |m_S = +1, 0, -1> (x) |n = +1, -1>, electron slow index.
Matrix6cd build_full_hamiltonian(const PhysicalConstants& c);

// Two-qubit effective Hamiltonian after detuning away |m_S = -1> and
// dropping the flip-flop term:
//   (D + g_e mu_B (B_ex+B)) |1><1|_e + A |1><1|_e (x) sz_n
//   + g_n mu_B B_ex sz_n.
// Basis: |0,1>_e (x) |0,1>_n, electron slow; |1>_e is m_S = +1 and
// |1>_n is the sz_n = +1 nuclear level, so sz_n = diag(-1,+1) per qubit
// and <11|H|11> contains +A.
// Throws EffectiveModelInvalid when the detuning ratio is below
// c.validity_factor (skipped when enforce_validity is false).
Matrix4cd build_effective_hamiltonian(const PhysicalConstants& c,
                                      bool enforce_validity = true);

// Same model in the frame that removes the bias-field terms; what is left
// is g_e mu_B B |1><1|_e + A |1><1|_e (x) sz_n, so the |11> level sits at
// the resonance frequency g_e mu_B B + A.
Matrix4cd rotating_frame_hamiltonian(const PhysicalConstants& c,
                                     bool enforce_validity = true);

// exp(-i H t) by exact eigendecomposition (H Hermitian).
Eigen::MatrixXcd propagator(const Eigen::MatrixXcd& H, double t);

struct ReductionReport {
  double trace_distance_max = 0.0;  // full vs effective model, common frame
  double leakage_max = 0.0;         // population escaped to |m_S = -1>
  double detuning_ratio = 0.0;
  bool valid = false;               // detuning_ratio >= validity factor
};

// Evolves the entangled mid-protocol state (|00> + |11>)/sqrt(2) under the
// full Hamiltonian and under the reduced model, on a uniform grid of
// `steps` intervals covering [0, t_max], and reports the worst-case
// disagreement. The projected two-qubit state is not renormalized, so
// leakage contributes to the trace distance.
ReductionReport validate_reduction(const PhysicalConstants& c, double t_max,
                                   int steps);

}  // namespace nvsensor
