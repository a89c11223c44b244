#include "nvsensor/gates.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace nvsensor {
namespace {

using std::complex;
const complex<double> kI(0.0, 1.0);

Eigen::Matrix2cd rotation_2(GateKind kind, double angle) {
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  Eigen::Matrix2cd u;
  if (kind == GateKind::RotX) {
    u << c, -kI * s, -kI * s, c;
  } else {
    u << c, -s, s, c;
  }
  return u;
}

Eigen::MatrixXcd embed_single(const Eigen::Matrix2cd& u, int target) {
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  const Eigen::Matrix2cd& slow = target == 0 ? u : id;
  const Eigen::Matrix2cd& fast = target == 0 ? id : u;
  Eigen::MatrixXcd out(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = slow(i, j) * fast;
  return out;
}

}  // namespace

GateOp GateOp::cnot() { return GateOp{GateKind::Cnot}; }
GateOp GateOp::swap() { return GateOp{GateKind::Swap}; }

GateOp GateOp::rot_x(int target, double angle) {
  return GateOp{GateKind::RotX, target, angle};
}

GateOp GateOp::rot_y(int target, double angle) {
  return GateOp{GateKind::RotY, target, angle};
}

Eigen::MatrixXcd GateOp::unitary(int dim) const {
  if (dim != 2 && dim != 4) {
    throw std::invalid_argument("gate dimension must be 2 or 4");
  }
  switch (kind) {
    case GateKind::RotX:
    case GateKind::RotY: {
      if (target < 0 || target >= (dim == 2 ? 1 : 2)) {
        throw std::invalid_argument("rotation target out of range");
      }
      const Eigen::Matrix2cd u = rotation_2(kind, angle);
      if (dim == 2) return u;
      return embed_single(u, target);
    }
    case GateKind::Cnot: {
      if (dim != 4) {
        throw std::invalid_argument("CNOT requires the two-qubit space");
      }
      // Nuclear spin controls, electron flips: swap |01> and |11>.
      Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(4, 4);
      u(1, 1) = u(3, 3) = 0.0;
      u(1, 3) = u(3, 1) = 1.0;
      return u;
    }
    case GateKind::Swap: {
      if (dim != 4) {
        throw std::invalid_argument("SWAP requires the two-qubit space");
      }
      Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(4, 4);
      u(1, 1) = u(2, 2) = 0.0;
      u(1, 2) = u(2, 1) = 1.0;
      return u;
    }
  }
  throw std::logic_error("unreachable gate kind");
}

DensityMatrix apply_gate(const DensityMatrix& rho, const GateOp& op) {
  const Eigen::MatrixXcd u = op.unitary(rho.dim());
  return DensityMatrix(u * rho.matrix() * u.adjoint());
}

}  // namespace nvsensor
