#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "nvsensor/density_matrix.hpp"
#include "nvsensor/gates.hpp"
#include "nvsensor/noise.hpp"
#include "nvsensor/rng.hpp"

using namespace nvsensor;
using cd = std::complex<double>;

namespace {

const cd kI(0.0, 1.0);

Eigen::VectorXcd ket2(cd a0, cd a1) {
  Eigen::VectorXcd v(2);
  v << a0, a1;
  return v;
}

Eigen::VectorXcd ket4(cd a0, cd a1, cd a2, cd a3) {
  Eigen::VectorXcd v(4);
  v << a0, a1, a2, a3;
  return v;
}

double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// |e n> product state with every pairwise coherence populated; a good probe
// for which matrix elements a channel touches.
DensityMatrix full_coherence_state() {
  return DensityMatrix::pure(ket4(0.5, 0.5, 0.5, 0.5));
}

}  // namespace

TEST_CASE("density matrix constructors and sanity predicates") {
  CHECK(DensityMatrix::ground(2).physical());
  CHECK(DensityMatrix::ground(4).physical());
  CHECK(DensityMatrix::maximally_mixed(4).physical());

  CHECK(DensityMatrix::ground(4).purity() == doctest::Approx(1.0));
  CHECK(DensityMatrix::maximally_mixed(4).purity() == doctest::Approx(0.25));
  CHECK(DensityMatrix::maximally_mixed(2).trace_real() ==
        doctest::Approx(1.0));

  CHECK_THROWS_AS(DensityMatrix(Eigen::MatrixXcd::Identity(3, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(DensityMatrix::pure(ket2(1.0, 1.0)), std::invalid_argument);

  // A trace-violating matrix is representable but flagged unphysical.
  CHECK(!DensityMatrix(2.0 * Eigen::MatrixXcd::Identity(2, 2)).physical());
}

TEST_CASE("partial trace of a product state returns the factors") {
  const Eigen::VectorXcd psi_e = ket2(0.8, 0.6 * kI);
  const Eigen::VectorXcd psi_n = ket2(0.6, 0.8);
  Eigen::VectorXcd prod(4);
  prod << psi_e(0) * psi_n(0), psi_e(0) * psi_n(1), psi_e(1) * psi_n(0),
      psi_e(1) * psi_n(1);

  const DensityMatrix rho = DensityMatrix::pure(prod);
  const DensityMatrix rho_e = partial_trace(rho, 0);
  const DensityMatrix rho_n = partial_trace(rho, 1);
  CHECK(max_abs_diff(rho_e.matrix(), (psi_e * psi_e.adjoint())) <= 1e-12);
  CHECK(max_abs_diff(rho_n.matrix(), (psi_n * psi_n.adjoint())) <= 1e-12);
}

TEST_CASE("partial trace of a Bell pair is maximally mixed") {
  const double r = 1.0 / std::sqrt(2.0);
  const DensityMatrix bell = DensityMatrix::pure(ket4(r, 0.0, 0.0, r));
  CHECK(max_abs_diff(partial_trace(bell, 0).matrix(),
                     0.5 * Eigen::MatrixXcd::Identity(2, 2)) <= 1e-12);
  CHECK(max_abs_diff(partial_trace(bell, 1).matrix(),
                     0.5 * Eigen::MatrixXcd::Identity(2, 2)) <= 1e-12);
  CHECK(partial_trace(bell, 0).purity() == doctest::Approx(0.5));
}

TEST_CASE("partial trace keeps the stored nuclear coherence") {
  // Mid-protocol bookkeeping state: electron back in |0>, nuclear spin in a
  // superposition whose coherence has soaked up phase and dephasing.
  const double f = std::exp(-3.0 * 0.09);
  const cd c = 0.5 * f * std::exp(kI * 1.2);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
  m(0, 0) = 0.5;
  m(1, 1) = 0.5;
  m(0, 1) = c;
  m(1, 0) = std::conj(c);

  const DensityMatrix rho(m);
  const DensityMatrix nuc = partial_trace(rho, 1);
  CHECK(std::abs(nuc(0, 1) - c) <= 1e-15);
  CHECK(std::abs(nuc(0, 0).real() - 0.5) <= 1e-15);

  const DensityMatrix ele = partial_trace(rho, 0);
  CHECK(std::abs(ele(0, 0) - cd(1.0)) <= 1e-15);
  CHECK(std::abs(ele(0, 1)) <= 1e-15);

  CHECK_THROWS_AS((void)partial_trace(rho, 2), std::invalid_argument);
  CHECK_THROWS_AS((void)partial_trace(DensityMatrix::ground(2), 0),
                  std::invalid_argument);
}

TEST_CASE("gate unitaries are unitary and preserve purity") {
  const GateOp ops[] = {GateOp::cnot(), GateOp::swap(),
                        GateOp::rot_x(0, 0.73), GateOp::rot_y(1, 2.31)};
  for (const GateOp& op : ops) {
    const Eigen::MatrixXcd u = op.unitary(4);
    CHECK(max_abs_diff(u * u.adjoint(), Eigen::MatrixXcd::Identity(4, 4)) <=
          1e-12);
  }
  const DensityMatrix rho = full_coherence_state();
  for (const GateOp& op : ops) {
    const DensityMatrix out = apply_gate(rho, op);
    CHECK(out.physical());
    CHECK(std::abs(out.purity() - rho.purity()) <= 1e-12);
  }
}

TEST_CASE("zero-angle rotation is the identity") {
  const DensityMatrix rho = full_coherence_state();
  const DensityMatrix out = apply_gate(rho, GateOp::rot_y(0, 0.0));
  CHECK(max_abs_diff(out.matrix(), rho.matrix()) <= 1e-15);
}

TEST_CASE("rotation conventions") {
  // R_y(pi/2)|0> = (|0> + |1>)/sqrt(2)
  const DensityMatrix plus =
      apply_gate(DensityMatrix::ground(2), GateOp::rot_y(0, M_PI / 2.0));
  CHECK(std::abs(plus(0, 0).real() - 0.5) <= 1e-12);
  CHECK(std::abs(plus(0, 1).real() - 0.5) <= 1e-12);
  CHECK(std::abs(plus(0, 1).imag()) <= 1e-12);

  // R_x(pi/2) sends |1_y> = (|0> + i|1>)/sqrt(2) to |0>.
  const double r = 1.0 / std::sqrt(2.0);
  const DensityMatrix y_plus = DensityMatrix::pure(ket2(r, r * kI));
  const DensityMatrix rotated = apply_gate(y_plus, GateOp::rot_x(0, M_PI / 2.0));
  CHECK(std::abs(rotated(0, 0).real() - 1.0) <= 1e-12);
}

TEST_CASE("CNOT flips the electron exactly on nuclear |1>") {
  auto basis = [](int i) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
    v(i) = 1.0;
    return DensityMatrix::pure(v);
  };
  // |e n>: |00> -> |00>, |01> -> |11>, |10> -> |10>, |11> -> |01>.
  CHECK(std::abs(apply_gate(basis(0), GateOp::cnot())(0, 0).real() - 1.0) <=
        1e-15);
  CHECK(std::abs(apply_gate(basis(1), GateOp::cnot())(3, 3).real() - 1.0) <=
        1e-15);
  CHECK(std::abs(apply_gate(basis(2), GateOp::cnot())(2, 2).real() - 1.0) <=
        1e-15);
  CHECK(std::abs(apply_gate(basis(3), GateOp::cnot())(1, 1).real() - 1.0) <=
        1e-15);
}

TEST_CASE("CNOT entangles the prepared nuclear superposition") {
  const double r = 1.0 / std::sqrt(2.0);
  const DensityMatrix in = DensityMatrix::pure(ket4(r, r, 0.0, 0.0));
  const DensityMatrix out = apply_gate(in, GateOp::cnot());
  const DensityMatrix bell = DensityMatrix::pure(ket4(r, 0.0, 0.0, r));
  CHECK(max_abs_diff(out.matrix(), bell.matrix()) <= 1e-12);
}

TEST_CASE("SWAP exchanges the qubits and squares to identity") {
  const DensityMatrix in = DensityMatrix::pure(ket4(0.0, 1.0, 0.0, 0.0));
  const DensityMatrix out = apply_gate(in, GateOp::swap());
  CHECK(std::abs(out(2, 2).real() - 1.0) <= 1e-15);

  const DensityMatrix rho = full_coherence_state();
  const DensityMatrix twice =
      apply_gate(apply_gate(rho, GateOp::swap()), GateOp::swap());
  CHECK(max_abs_diff(twice.matrix(), rho.matrix()) <= 1e-12);
}

TEST_CASE("gate dimension checks") {
  CHECK_THROWS_AS((void)GateOp::cnot().unitary(2), std::invalid_argument);
  CHECK_THROWS_AS((void)GateOp::swap().unitary(2), std::invalid_argument);
  CHECK_THROWS_AS((void)GateOp::rot_x(1, 0.5).unitary(2),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)GateOp::rot_y(2, 0.5).unitary(4),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)GateOp::cnot().unitary(3), std::invalid_argument);
}

TEST_CASE("noise model factories and coherence factors") {
  CHECK_THROWS_AS((void)NoiseModel::markovian(0.0), std::invalid_argument);
  CHECK_THROWS_AS((void)NoiseModel::quasi_static(-1.0), std::invalid_argument);

  const NoiseModel mk = NoiseModel::markovian(2.0);
  const NoiseModel qs = NoiseModel::quasi_static(2.0);
  CHECK(mk.coherence_factor(2.0) == doctest::Approx(std::exp(-1.0)));
  CHECK(qs.coherence_factor(2.0) == doctest::Approx(std::exp(-1.0)));
  CHECK(qs.coherence_factor(1.0) == doctest::Approx(std::exp(-0.25)));
  CHECK(NoiseModel::none().coherence_factor(123.0) == 1.0);
  CHECK(mk.coherence_factor(0.0) == 1.0);
  CHECK_THROWS_AS((void)mk.coherence_factor(-0.1), std::invalid_argument);

  CHECK(noise_kind_from_string("markovian") == NoiseModel::Kind::Markovian);
  CHECK(noise_kind_from_string("quasistatic") ==
        NoiseModel::Kind::QuasiStatic);
  CHECK(noise_kind_from_string("quasi-static") ==
        NoiseModel::Kind::QuasiStatic);
  CHECK(noise_kind_from_string("none") == NoiseModel::Kind::None);
  CHECK_THROWS_AS((void)noise_kind_from_string("pink"), std::invalid_argument);
  CHECK(to_string(NoiseModel::Kind::QuasiStatic) == "quasistatic");
}

TEST_CASE("dephasing touches only electron coherences") {
  const NoiseModel qs = NoiseModel::quasi_static(1.0);
  const double f = std::exp(-0.36);  // t = 0.6, T2 = 1
  const DensityMatrix out = apply_dephasing(full_coherence_state(), qs, 0.6);

  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const bool electron_flip = (i >> 1) != (j >> 1);
      const double expected = 0.25 * (electron_flip ? f : 1.0);
      CHECK(std::abs(out(i, j) - cd(expected)) <= 1e-15);
    }
  }
  CHECK(out.physical());

  SUBCASE("single-qubit form") {
    const DensityMatrix plus =
        DensityMatrix::pure(ket2(M_SQRT1_2, M_SQRT1_2));
    const DensityMatrix damped = apply_dephasing(plus, qs, 1.0);
    CHECK(std::abs(damped(0, 1).real() - 0.5 * std::exp(-1.0)) <= 1e-15);
    CHECK(std::abs(damped(0, 0).real() - 0.5) <= 1e-15);
  }
}

TEST_CASE("Markovian dephasing composes in time, quasi-static does not") {
  const DensityMatrix rho = full_coherence_state();

  const NoiseModel mk = NoiseModel::markovian(1.3);
  const DensityMatrix split =
      apply_dephasing(apply_dephasing(rho, mk, 0.3), mk, 0.45);
  const DensityMatrix whole = apply_dephasing(rho, mk, 0.75);
  CHECK(max_abs_diff(split.matrix(), whole.matrix()) <= 1e-12);

  const NoiseModel qs = NoiseModel::quasi_static(1.0);
  const DensityMatrix qs_split =
      apply_dephasing(apply_dephasing(rho, qs, 0.5), qs, 0.5);
  const DensityMatrix qs_whole = apply_dephasing(rho, qs, 1.0);
  // e^{-1/4} twice vs e^{-1}: the slow-noise law remembers the full window.
  const double gap = std::abs(qs_split(0, 2).real() - qs_whole(0, 2).real());
  CHECK(gap > 0.05);
}

TEST_CASE("quasi-static factor equals a Gaussian detuning average") {
  // The ensemble behind e^{-(t/T2)^2} is a normal detuning with sigma =
  // sqrt(2)/T2: averaging cos(delta t) over draws must land on the factor.
  const double t2 = 1.0;
  const double t = 0.6;
  const double sigma = std::sqrt(2.0) / t2;

  Rng rng(0xc0ffee11u);
  const int n = 200000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double c = std::cos(sigma * rng.gaussian() * t);
    sum += c;
    sum_sq += c * c;
  }
  const double mean = sum / n;
  const double var = (sum_sq - n * mean * mean) / (n - 1.0);
  const double se = std::sqrt(var / n);

  const double expected = NoiseModel::quasi_static(t2).coherence_factor(t);
  CHECK(std::abs(mean - expected) <= 3.0 * se);
}

TEST_CASE("depolarizing channel pulls toward the identity") {
  const double r = 1.0 / std::sqrt(2.0);
  const DensityMatrix bell = DensityMatrix::pure(ket4(r, 0.0, 0.0, r));

  const DensityMatrix same = apply_depolarizing(bell, GateNoise{0.0});
  CHECK(max_abs_diff(same.matrix(), bell.matrix()) <= 1e-15);

  const DensityMatrix flat = apply_depolarizing(bell, GateNoise{1.0});
  CHECK(max_abs_diff(flat.matrix(),
                     0.25 * Eigen::MatrixXcd::Identity(4, 4)) <= 1e-15);

  const DensityMatrix mixed = apply_depolarizing(bell, GateNoise{0.1});
  CHECK(std::abs(mixed(0, 3).real() - 0.9 * 0.5) <= 1e-15);
  CHECK(std::abs(mixed(0, 0).real() - (0.9 * 0.5 + 0.025)) <= 1e-15);
  CHECK(std::abs(mixed(1, 1).real() - 0.025) <= 1e-15);
  CHECK(mixed.physical());

  SUBCASE("two applications equal one at the composed strength") {
    const DensityMatrix twice = apply_depolarizing(
        apply_depolarizing(bell, GateNoise{0.1}), GateNoise{0.1});
    const double eps_total = 1.0 - 0.9 * 0.9;
    const DensityMatrix once = apply_depolarizing(bell, GateNoise{eps_total});
    CHECK(max_abs_diff(twice.matrix(), once.matrix()) <= 1e-12);
  }

  CHECK_THROWS_AS((void)apply_depolarizing(bell, GateNoise{-0.1}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)apply_depolarizing(bell, GateNoise{1.5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      (void)apply_depolarizing(DensityMatrix::ground(2), GateNoise{0.1}),
      std::invalid_argument);
}

TEST_CASE("channels keep states physical") {
  DensityMatrix rho = full_coherence_state();
  rho = apply_dephasing(rho, NoiseModel::markovian(0.7), 0.4);
  rho = apply_depolarizing(rho, GateNoise{0.2});
  rho = apply_gate(rho, GateOp::cnot());
  rho = apply_dephasing(rho, NoiseModel::quasi_static(0.7), 0.9);
  CHECK(std::abs(rho.trace_real() - 1.0) <= 1e-10);
  CHECK(rho.hermiticity_error() <= 1e-12);
  CHECK(rho.min_eigenvalue() >= -1e-10);
  CHECK(rho.physical());
}

TEST_CASE("measurement probabilities in the Z and Y bases") {
  const double r = 1.0 / std::sqrt(2.0);

  const DensityMatrix plus = DensityMatrix::pure(ket2(r, r));
  const MeasureResult y_plus = measure_basis(plus, 0, MeasureBasis::Y);
  CHECK(y_plus.p0 == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(y_plus.p1 == doctest::Approx(0.5).epsilon(1e-12));

  // (|0> + e^{-i pi/2}|1>)/sqrt(2) is the sigma_y = -1 eigenstate.
  const DensityMatrix y_minus_state =
      DensityMatrix::pure(ket2(r, r * std::exp(-kI * (M_PI / 2.0))));
  const MeasureResult ym = measure_basis(y_minus_state, 0, MeasureBasis::Y);
  CHECK(ym.p1 <= 1e-12);
  CHECK(ym.p0 == doctest::Approx(1.0).epsilon(1e-12));

  const DensityMatrix y_plus_state = DensityMatrix::pure(ket2(r, r * kI));
  CHECK(measure_basis(y_plus_state, 0, MeasureBasis::Y).p1 ==
        doctest::Approx(1.0).epsilon(1e-12));

  const MeasureResult mixed =
      measure_basis(DensityMatrix::maximally_mixed(4), 1, MeasureBasis::Y);
  CHECK(mixed.p0 == doctest::Approx(0.5).epsilon(1e-12));

  // |10>: electron reads 1, nuclear spin reads 0.
  const DensityMatrix ten = DensityMatrix::pure(ket4(0.0, 0.0, 1.0, 0.0));
  CHECK(measure_basis(ten, 0, MeasureBasis::Z).p1 ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(measure_basis(ten, 1, MeasureBasis::Z).p0 ==
        doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS((void)measure_basis(plus, 1, MeasureBasis::Z),
                  std::invalid_argument);
}

TEST_CASE("Y-basis probabilities equal the direct projector average") {
  // Independent oracle: P(1_y) = tr(rho * |1_y><1_y| on the given qubit).
  Eigen::Matrix2cd proj;  // |1_y><1_y| = (I + sigma_y)/2
  proj << cd(0.5, 0.0), cd(0.0, -0.5), cd(0.0, 0.5), cd(0.5, 0.0);
  const Eigen::Matrix2cd id2 = Eigen::Matrix2cd::Identity();

  auto kron = [](const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    Eigen::MatrixXcd out(4, 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        out.block(2 * i, 2 * j, 2, 2) = a(i, j) * b;
    return out;
  };

  DensityMatrix rho = full_coherence_state();
  rho = apply_gate(rho, GateOp::cnot());
  rho = apply_dephasing(rho, NoiseModel::quasi_static(1.0), 0.4);
  rho = apply_depolarizing(rho, GateNoise{0.07});

  const double p1_e = measure_basis(rho, 0, MeasureBasis::Y).p1;
  const double p1_n = measure_basis(rho, 1, MeasureBasis::Y).p1;
  const double direct_e = (rho.matrix() * kron(proj, id2)).trace().real();
  const double direct_n = (rho.matrix() * kron(id2, proj)).trace().real();
  CHECK(std::abs(p1_e - direct_e) <= 1e-12);
  CHECK(std::abs(p1_n - direct_n) <= 1e-12);
}
