#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nvsensor/constants.hpp"
#include "nvsensor/protocol.hpp"

namespace nvsensor {

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Everything a run needs, collected from one key-value file with
// [physical], [sensor], [timing] and [run] sections; command-line flags
// override individual fields afterwards.
struct RunConfig {
  PhysicalConstants constants = PhysicalConstants::nv_defaults();
  SensorParams sensor;

  // [timing]
  double tau_p = 2e-6;   // state preparation [s]
  double tau_w = 25e-6;  // inter-segment waiting time [s]
  double tau_m = 2e-6;   // optical readout [s]
  bool extended_budget = false;  // count free evolution in the hybrid cycle

  // [run]
  std::optional<std::uint64_t> seed;  // required by stochastic commands
  int repetitions = 200;
  long trajectory_shots = 100000;
  std::string out_dir = "out";
  std::string format = "csv";  // csv | json | svg
  std::string sweep_n_list = "1,2,4,8,16,32";
  double eps_lo = 1e-4;
  double eps_hi = 1e-1;
  int eps_points = 61;
  long n_max = 100000;
  double reduction_t_max = 0.0;  // 0 picks 10 / max(|A|, |A_perp|)
  int reduction_steps = 200;
};

// Strict parser: unknown sections/keys, malformed numbers, or out-of-range
// enums all raise ConfigError with the offending line.
RunConfig load_config(const std::filesystem::path& path);

std::vector<int> parse_n_list(const std::string& comma_separated);

}  // namespace nvsensor
