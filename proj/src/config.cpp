#include "nvsensor/config.hpp"

#include <fstream>
#include <sstream>

#include "nvsensor/noise.hpp"

namespace nvsensor {
namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(int line_no, const std::string& line,
                       const std::string& why) {
  throw ConfigError("config line " + std::to_string(line_no) + ": " + why +
                    " (\"" + line + "\")");
}

double parse_double(const std::string& v, int line_no,
                    const std::string& line) {
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used != v.size()) fail(line_no, line, "trailing junk after number");
    return d;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    fail(line_no, line, "not a number");
  }
}

long parse_long(const std::string& v, int line_no, const std::string& line) {
  try {
    std::size_t used = 0;
    const long l = std::stol(v, &used);
    if (used != v.size()) fail(line_no, line, "trailing junk after integer");
    return l;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    fail(line_no, line, "not an integer");
  }
}

std::uint64_t parse_u64(const std::string& v, int line_no,
                        const std::string& line) {
  // stoull would wrap a negative value around instead of rejecting it.
  if (!v.empty() && v[0] == '-') fail(line_no, line, "not an unsigned integer");
  try {
    std::size_t used = 0;
    const std::uint64_t u = std::stoull(v, &used);
    if (used != v.size()) fail(line_no, line, "trailing junk after integer");
    return u;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    fail(line_no, line, "not an unsigned integer");
  }
}

bool parse_bool(const std::string& v, int line_no, const std::string& line) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  fail(line_no, line, "expected true/false");
}

}  // namespace

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file " + path.string());

  RunConfig cfg;
  std::string section;
  std::string line;
  int line_no = 0;
  while (std::getline(f, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[') {
      if (t.back() != ']') fail(line_no, line, "unterminated section header");
      section = trim(t.substr(1, t.size() - 2));
      if (section != "physical" && section != "sensor" &&
          section != "timing" && section != "run") {
        fail(line_no, line, "unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos) fail(line_no, line, "expected key = value");
    const std::string key = trim(t.substr(0, eq));
    const std::string val = trim(t.substr(eq + 1));
    if (key.empty()) fail(line_no, line, "empty key");
    if (section.empty()) fail(line_no, line, "key outside any section");

    auto num = [&] { return parse_double(val, line_no, line); };
    auto integer = [&] { return parse_long(val, line_no, line); };

    if (section == "physical") {
      if (key == "d") cfg.constants.D = num();
      else if (key == "g_e") cfg.constants.g_e = num();
      else if (key == "g_n") cfg.constants.g_n = num();
      else if (key == "mu_b") cfg.constants.mu_B = num();
      else if (key == "a") cfg.constants.A = num();
      else if (key == "a_perp") cfg.constants.A_perp = num();
      else if (key == "b_ex") cfg.constants.B_ex = num();
      else if (key == "b") cfg.constants.B = num();
      else if (key == "validity_factor") cfg.constants.validity_factor = num();
      else fail(line_no, line, "unknown [physical] key " + key);
    } else if (section == "sensor") {
      if (key == "t2e") cfg.sensor.t2e = num();
      else if (key == "omega") cfg.sensor.omega = num();
      else if (key == "n") cfg.sensor.n_transfers = int(integer());
      else if (key == "alpha") cfg.sensor.alpha = num();
      else if (key == "shots") cfg.sensor.shots = integer();
      else if (key == "gate_epsilon") cfg.sensor.gate_epsilon = num();
      else if (key == "noise") {
        try {
          cfg.sensor.noise_kind = noise_kind_from_string(val);
        } catch (const std::invalid_argument& e) {
          fail(line_no, line, e.what());
        }
      } else {
        fail(line_no, line, "unknown [sensor] key " + key);
      }
    } else if (section == "timing") {
      if (key == "tau_p") cfg.tau_p = num();
      else if (key == "tau_w") cfg.tau_w = num();
      else if (key == "tau_m") cfg.tau_m = num();
      else if (key == "extended_budget") {
        cfg.extended_budget = parse_bool(val, line_no, line);
      } else {
        fail(line_no, line, "unknown [timing] key " + key);
      }
    } else {  // run
      if (key == "seed") cfg.seed = parse_u64(val, line_no, line);
      else if (key == "repetitions") cfg.repetitions = int(integer());
      else if (key == "trajectory_shots") cfg.trajectory_shots = integer();
      else if (key == "out_dir") cfg.out_dir = val;
      else if (key == "format") {
        if (val != "csv" && val != "json" && val != "svg") {
          fail(line_no, line, "format must be csv, json or svg");
        }
        cfg.format = val;
      } else if (key == "sweep_n_list") cfg.sweep_n_list = val;
      else if (key == "eps_lo") cfg.eps_lo = num();
      else if (key == "eps_hi") cfg.eps_hi = num();
      else if (key == "eps_points") cfg.eps_points = int(integer());
      else if (key == "n_max") cfg.n_max = integer();
      else if (key == "reduction_t_max") cfg.reduction_t_max = num();
      else if (key == "reduction_steps") cfg.reduction_steps = int(integer());
      else fail(line_no, line, "unknown [run] key " + key);
    }
  }
  return cfg;
}

std::vector<int> parse_n_list(const std::string& comma_separated) {
  std::vector<int> out;
  std::stringstream ss(comma_separated);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string t = trim(item);
    if (t.empty()) continue;
    try {
      std::size_t used = 0;
      const int n = std::stoi(t, &used);
      if (used != t.size() || n < 1) throw std::invalid_argument(t);
      out.push_back(n);
    } catch (const std::exception&) {
      throw ConfigError("bad transfer count in N list: \"" + t + "\"");
    }
  }
  if (out.empty()) throw ConfigError("empty N list");
  return out;
}

}  // namespace nvsensor
