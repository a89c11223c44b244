#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "nvsensor/protocol.hpp"

using namespace nvsensor;

namespace {

SensorParams base_params() {
  SensorParams p;
  p.t2e = 1.0;
  p.omega = 0.3;
  p.n_transfers = 4;
  p.alpha = 0.7;
  p.shots = 1000;
  p.gate_epsilon = 0.0;
  p.noise_kind = NoiseModel::Kind::QuasiStatic;
  return p;
}

// The channel-level click probability the sequence is supposed to realize:
// 1/2 - 1/2 (1-eps)^{2N+1} f_seg^N sin(alpha sqrt(N) omega T2e).
double closed_form_p(const SensorParams& p) {
  const double tau = p.segment_time();
  const double f_seg = p.noise().coherence_factor(tau);
  const double visibility =
      std::pow(1.0 - p.gate_epsilon, 2.0 * p.n_transfers + 1.0) *
      std::pow(f_seg, p.n_transfers);
  return 0.5 - 0.5 * visibility * std::sin(p.total_phase());
}

}  // namespace

TEST_CASE("sensor parameter bookkeeping") {
  SensorParams p = base_params();
  CHECK(p.segment_time() == doctest::Approx(0.7 / 2.0).epsilon(1e-15));
  CHECK(p.total_phase() == doctest::Approx(0.7 * 2.0 * 0.3).epsilon(1e-15));
  CHECK(!p.phase_wrapped());
  p.omega = 2.0;  // 0.7 * 2 * 2.0 = 2.8 > pi/2
  CHECK(p.phase_wrapped());

  SensorParams bad = base_params();
  bad.alpha = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = base_params();
  bad.n_transfers = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = base_params();
  bad.t2e = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = base_params();
  bad.gate_epsilon = 1.5;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = base_params();
  bad.shots = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("conventional run reproduces the Ramsey fringe") {
  SensorParams p = base_params();

  for (double t : {0.2, 1.0, 1.7}) {
    for (double omega : {0.0, 0.3, 2.1}) {
      for (NoiseModel::Kind kind :
           {NoiseModel::Kind::None, NoiseModel::Kind::Markovian,
            NoiseModel::Kind::QuasiStatic}) {
        p.omega = omega;
        p.noise_kind = kind;
        const ProtocolOutcome out = run_conventional(p, t);
        const double f = p.noise().coherence_factor(t);
        CHECK(std::abs(out.p_click -
                       (0.5 - 0.5 * f * std::sin(omega * t))) <= 1e-12);
        CHECK(std::abs(out.coherence - 0.5 * f) <= 1e-12);
        CHECK(std::abs(out.accumulated_phase - omega * t) <= 1e-15);
        CHECK(out.final_state.physical());
      }
    }
  }

  SUBCASE("quarter fringe with no noise clicks never") {
    p.omega = M_PI / 2.0;
    p.noise_kind = NoiseModel::Kind::None;
    const ProtocolOutcome out = run_conventional(p, 1.0);
    CHECK(std::abs(out.p_click) <= 1e-12);
    CHECK(out.phase_wrap);
  }

  CHECK_THROWS_AS((void)run_conventional(base_params(), -0.5),
                  std::invalid_argument);
}

TEST_CASE("hybrid exact run matches the closed form across regimes") {
  SensorParams p = base_params();
  for (int n : {1, 3, 8}) {
    for (double alpha : {0.3, 0.7071067811865476, 1.2}) {
      for (double eps : {0.0, 0.02, 0.15}) {
        for (double omega : {0.0, 0.25, 1.0}) {
          for (NoiseModel::Kind kind :
               {NoiseModel::Kind::None, NoiseModel::Kind::Markovian,
                NoiseModel::Kind::QuasiStatic}) {
            p.n_transfers = n;
            p.alpha = alpha;
            p.gate_epsilon = eps;
            p.omega = omega;
            p.noise_kind = kind;
            const ProtocolOutcome out = run_hybrid_exact(p);
            CHECK(std::abs(out.p_click - closed_form_p(p)) <= 1e-10);
            CHECK(out.final_state.physical());
          }
        }
      }
    }
  }
}

TEST_CASE("hybrid coherence carries the gate and dephasing budget") {
  SensorParams p = base_params();
  p.n_transfers = 5;
  p.alpha = 0.9;
  p.gate_epsilon = 0.03;

  const ProtocolOutcome out = run_hybrid_exact(p);
  const double expected =
      0.5 * std::pow(0.97, 11.0) * std::exp(-0.81);  // quasi-static: e^{-a^2}
  CHECK(std::abs(out.coherence - expected) <= 1e-12);

  p.noise_kind = NoiseModel::Kind::Markovian;
  const ProtocolOutcome mk = run_hybrid_exact(p);
  const double mk_expected =
      0.5 * std::pow(0.97, 11.0) * std::exp(-0.9 * std::sqrt(5.0));
  CHECK(std::abs(mk.coherence - mk_expected) <= 1e-12);
}

TEST_CASE("single transfer with clean gates is a Ramsey run") {
  SensorParams p = base_params();
  p.n_transfers = 1;
  p.gate_epsilon = 0.0;
  for (double alpha : {0.4, 0.7071067811865476, 1.3}) {
    for (double omega : {0.0, 0.45}) {
      p.alpha = alpha;
      p.omega = omega;
      const ProtocolOutcome hy = run_hybrid_exact(p);
      const ProtocolOutcome conv = run_conventional(p, alpha * p.t2e);
      CHECK(std::abs(hy.p_click - conv.p_click) <= 1e-12);
      CHECK(std::abs(hy.coherence - conv.coherence) <= 1e-12);
    }
  }
}

TEST_CASE("coherence decreases monotonically in gate error and exposure") {
  SensorParams p = base_params();
  double prev = 1.0;
  for (double eps : {0.0, 0.02, 0.05, 0.1, 0.3}) {
    p.gate_epsilon = eps;
    const double c = run_hybrid_exact(p).coherence;
    CHECK(c < prev);
    prev = c;
  }
  p = base_params();
  prev = 1.0;
  for (double alpha : {0.4, 0.8, 1.2, 1.6}) {
    p.alpha = alpha;
    const double c = run_hybrid_exact(p).coherence;
    CHECK(c < prev);
    prev = c;
  }
}

TEST_CASE("phase wrap is flagged on the outcome") {
  SensorParams p = base_params();
  p.omega = 0.1;
  CHECK(!run_hybrid_exact(p).phase_wrap);
  p.omega = 2.0;
  CHECK(run_hybrid_exact(p).phase_wrap);
  CHECK(std::abs(run_hybrid_exact(p).accumulated_phase - p.total_phase()) <=
        1e-15);
}

TEST_CASE("trajectory sampling is deterministic per seed") {
  const SensorParams p = base_params();
  const TrajectoryOutcome a = run_hybrid_trajectories(p, 20000, 1234);
  const TrajectoryOutcome b = run_hybrid_trajectories(p, 20000, 1234);
  const TrajectoryOutcome c = run_hybrid_trajectories(p, 20000, 1235);
  CHECK(a.clicks == b.clicks);
  CHECK(a.p_click == b.p_click);
  CHECK(a.clicks != c.clicks);  // different stream, overwhelmingly likely
  CHECK(a.shots == 20000);
  CHECK(a.std_error ==
        doctest::Approx(std::sqrt(a.p_click * (1.0 - a.p_click) / 20000.0))
            .epsilon(1e-12));
  CHECK_THROWS_AS((void)run_hybrid_trajectories(p, 0, 1), std::invalid_argument);
}

TEST_CASE("trajectory average agrees with the exact channel") {
  // Each noise ingredient has a stochastic unraveling; all of them must
  // land on the density-matrix result to binomial accuracy.
  const long shots = 100000;
  SensorParams p = base_params();
  p.omega = 0.4;

  std::uint64_t seed = 77001;
  auto check_agreement = [&](const SensorParams& params) {
    const double exact = run_hybrid_exact(params).p_click;
    const TrajectoryOutcome traj =
        run_hybrid_trajectories(params, shots, seed++);
    const double sigma = std::sqrt(exact * (1.0 - exact) / double(shots));
    CHECK(std::abs(traj.p_click - exact) <= 3.0 * sigma);
  };

  SUBCASE("noiseless interference") {
    p.noise_kind = NoiseModel::Kind::None;
    check_agreement(p);
  }
  SUBCASE("quasi-static detuning draws") {
    p.noise_kind = NoiseModel::Kind::QuasiStatic;
    check_agreement(p);
  }
  SUBCASE("Markovian phase flips") {
    p.noise_kind = NoiseModel::Kind::Markovian;
    check_agreement(p);
  }
  SUBCASE("depolarizing gate errors") {
    p.noise_kind = NoiseModel::Kind::None;
    p.gate_epsilon = 0.08;
    check_agreement(p);
  }
  SUBCASE("everything at once") {
    p.noise_kind = NoiseModel::Kind::QuasiStatic;
    p.gate_epsilon = 0.05;
    p.n_transfers = 7;
    check_agreement(p);
  }
}

TEST_CASE("transcript lists the pulse sequence with gate counts") {
  SensorParams p = base_params();
  p.n_transfers = 3;
  const nlohmann::json seq = transcript(p);

  // ry + 3 x (cnot, wait, cnot) + swap + rx + measure.
  CHECK(seq.size() == 13);

  int two_qubit_noisy = 0;
  int waits = 0;
  for (const auto& op : seq) {
    if (op["noisy"].get<bool>()) {
      ++two_qubit_noisy;
      CHECK((op["op"] == "cnot" || op["op"] == "swap"));
      CHECK(op["qubits"].size() == 2);
    }
    if (op["op"] == "wait") {
      ++waits;
      CHECK(op["duration_s"].get<double>() ==
            doctest::Approx(p.segment_time()).epsilon(1e-15));
    } else {
      CHECK(op["duration_s"].get<double>() == 0.0);
    }
  }
  CHECK(two_qubit_noisy == 2 * p.n_transfers + 1);
  CHECK(waits == p.n_transfers);

  CHECK(seq.front()["op"] == "ry");
  CHECK(seq.front()["angle_rad"].get<double>() ==
        doctest::Approx(M_PI / 2.0).epsilon(1e-15));
  CHECK(seq.back()["op"] == "measure");
  CHECK(seq.back()["basis"] == "z");

  p.n_transfers = 1;
  CHECK(transcript(p).size() == 7);
}
