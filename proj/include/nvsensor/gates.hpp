#pragma once

#include <Eigen/Dense>

#include "nvsensor/density_matrix.hpp"

namespace nvsensor {

// Discrete gate set of the sensing sequence. Single-qubit rotations use the
// convention R_a(theta) = exp(-i theta sigma_a / 2).
enum class GateKind { RotX, RotY, Cnot, Swap };

struct GateOp {
  GateKind kind;
  int target = 0;      // rotations: qubit the pulse addresses
  double angle = 0.0;  // rotations only

  // Nuclear-controlled electron flip: |01> <-> |11>; nuclear |0> stays put.
  static GateOp cnot();
  // Exchange the electron and nuclear qubit states.
  static GateOp swap();
  static GateOp rot_x(int target, double angle);
  static GateOp rot_y(int target, double angle);

  // Unitary in the requested dimension (2 for a bare qubit, 4 for the
  // electron-nuclear pair with the electron as the slow index).
  Eigen::MatrixXcd unitary(int dim) const;
};

// rho -> U rho U^dagger
DensityMatrix apply_gate(const DensityMatrix& rho, const GateOp& op);

}  // namespace nvsensor
