#pragma once

#include <string>
#include <string_view>

#include "nvsensor/density_matrix.hpp"

namespace nvsensor {

// Dephasing acting on the electron spin. Markovian noise is memoryless
// (exponential coherence decay); quasi-static noise is slow compared to a
// single run and decays quadratically in the exponent.
struct NoiseModel {
  enum class Kind { None, Markovian, QuasiStatic };

  Kind kind = Kind::None;
  double t2 = 0.0;  // dephasing time, required unless kind == None

  static NoiseModel none() { return {Kind::None, 0.0}; }
  static NoiseModel markovian(double t2);
  static NoiseModel quasi_static(double t2);

  // Ensemble factor multiplying the electron coherence after free
  // evolution of duration t: 1, e^{-t/T2}, or e^{-(t/T2)^2}.
  double coherence_factor(double t) const;
};

NoiseModel::Kind noise_kind_from_string(std::string_view s);
std::string to_string(NoiseModel::Kind kind);

// Two-qubit gate imperfection: with probability epsilon the state is
// replaced by the maximally mixed state.
struct GateNoise {
  double epsilon = 0.0;
};

// Multiplies every element coherent between electron |0> and |1> by the
// model's factor f(t); populations and nuclear-only coherences untouched.
DensityMatrix apply_dephasing(const DensityMatrix& rho, const NoiseModel& noise,
                              double t);

// rho -> (1 - epsilon) rho + epsilon I/4 (two-qubit states only).
DensityMatrix apply_depolarizing(const DensityMatrix& rho, const GateNoise& gn);

enum class MeasureBasis { Z, Y };

struct MeasureResult {
  double p0 = 0.0;
  double p1 = 0.0;
};

// Born-rule probabilities for the one-qubit projective measurement on
// `qubit`. Z: p0/p1 are the |0>/|1> populations. Y: outcomes refer to the
// sigma_y eigenstates |0_y> = (|0> - i|1>)/sqrt(2) (eigenvalue -1, p0) and
// |1_y> = (|0> + i|1>)/sqrt(2) (eigenvalue +1, p1); realized by RotX(pi/2)
// followed by the Z projection, which maps |1_y> onto |0>.
MeasureResult measure_basis(const DensityMatrix& rho, int qubit,
                            MeasureBasis basis);

}  // namespace nvsensor
