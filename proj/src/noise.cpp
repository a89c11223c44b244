#include "nvsensor/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "nvsensor/gates.hpp"

namespace nvsensor {

NoiseModel NoiseModel::markovian(double t2) {
  if (!(t2 > 0.0)) throw std::invalid_argument("Markovian noise needs T2 > 0");
  return {Kind::Markovian, t2};
}

NoiseModel NoiseModel::quasi_static(double t2) {
  if (!(t2 > 0.0)) {
    throw std::invalid_argument("quasi-static noise needs T2 > 0");
  }
  return {Kind::QuasiStatic, t2};
}

double NoiseModel::coherence_factor(double t) const {
  if (t < 0.0) throw std::invalid_argument("negative evolution time");
  switch (kind) {
    case Kind::None:
      return 1.0;
    case Kind::Markovian:
      return std::exp(-t / t2);
    case Kind::QuasiStatic: {
      const double x = t / t2;
      return std::exp(-x * x);
    }
  }
  throw std::logic_error("unreachable noise kind");
}

NoiseModel::Kind noise_kind_from_string(std::string_view s) {
  if (s == "none") return NoiseModel::Kind::None;
  if (s == "markovian") return NoiseModel::Kind::Markovian;
  if (s == "quasistatic" || s == "quasi-static") {
    return NoiseModel::Kind::QuasiStatic;
  }
  throw std::invalid_argument("unknown noise model: " + std::string(s));
}

std::string to_string(NoiseModel::Kind kind) {
  switch (kind) {
    case NoiseModel::Kind::None:
      return "none";
    case NoiseModel::Kind::Markovian:
      return "markovian";
    case NoiseModel::Kind::QuasiStatic:
      return "quasistatic";
  }
  return "?";
}

DensityMatrix apply_dephasing(const DensityMatrix& rho,
                              const NoiseModel& noise, double t) {
  const double f = noise.coherence_factor(t);  // validates t >= 0
  Eigen::MatrixXcd m = rho.matrix();
  if (rho.dim() == 2) {
    m(0, 1) *= f;
    m(1, 0) *= f;
  } else {
    // Electron is the slow index: |e n> = 2e + n. Scale every element
    // whose bra and ket differ in e.
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        if ((i >> 1) != (j >> 1)) m(i, j) *= f;
      }
    }
  }
  return DensityMatrix(std::move(m));
}

DensityMatrix apply_depolarizing(const DensityMatrix& rho,
                                 const GateNoise& gn) {
  if (rho.dim() != 4) {
    throw std::invalid_argument("depolarizing channel expects the gate space");
  }
  if (!(gn.epsilon >= 0.0 && gn.epsilon <= 1.0)) {
    throw std::invalid_argument("gate error probability outside [0, 1]");
  }
  Eigen::MatrixXcd m = (1.0 - gn.epsilon) * rho.matrix() +
                       gn.epsilon * 0.25 * Eigen::MatrixXcd::Identity(4, 4);
  return DensityMatrix(std::move(m));
}

MeasureResult measure_basis(const DensityMatrix& rho, int qubit,
                            MeasureBasis basis) {
  if (qubit < 0 || qubit >= rho.num_qubits()) {
    throw std::invalid_argument("measurement qubit out of range");
  }
  const DensityMatrix& observed =
      basis == MeasureBasis::Y
          ? apply_gate(rho, GateOp::rot_x(qubit, M_PI / 2.0))
          : rho;
  double pop0 = 0.0;
  const Eigen::MatrixXcd& m = observed.matrix();
  for (int i = 0; i < observed.dim(); ++i) {
    const int bit =
        observed.dim() == 2 ? i : (qubit == 0 ? (i >> 1) : (i & 1));
    if (bit == 0) pop0 += m(i, i).real();
  }
  MeasureResult r;
  if (basis == MeasureBasis::Y) {
    // RotX(pi/2) sends |1_y> to |0>, so the post-rotation ground
    // population is the sigma_y = +1 probability.
    r.p1 = pop0;
    r.p0 = 1.0 - pop0;
  } else {
    r.p0 = pop0;
    r.p1 = 1.0 - pop0;
  }
  return r;
}

}  // namespace nvsensor
