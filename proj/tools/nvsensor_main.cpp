#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>

#include "nvsensor/analytics.hpp"
#include "nvsensor/config.hpp"
#include "nvsensor/errors.hpp"
#include "nvsensor/estimation.hpp"
#include "nvsensor/hamiltonian.hpp"
#include "nvsensor/io.hpp"
#include "nvsensor/optimizer.hpp"
#include "nvsensor/protocol.hpp"
#include "nvsensor/rng.hpp"

namespace {

using namespace nvsensor;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitModelInvalid = 1;
constexpr int kExitUsage = 2;

std::uint64_t require_seed(const RunConfig& cfg) {
  if (!cfg.seed) {
    throw ConfigError(
        "this command draws random numbers: set seed in [run] or pass "
        "--seed");
  }
  return *cfg.seed;
}

fs::path out_path(const RunConfig& cfg, const char* name) {
  return fs::path(cfg.out_dir) / name;
}

nlohmann::json sensor_json(const SensorParams& p) {
  return {{"t2e", p.t2e},
          {"omega", p.omega},
          {"n", p.n_transfers},
          {"alpha", p.alpha},
          {"shots", p.shots},
          {"gate_epsilon", p.gate_epsilon},
          {"noise", to_string(p.noise_kind)}};
}

int cmd_validate_model(const RunConfig& cfg) {
  double t_max = cfg.reduction_t_max;
  if (t_max <= 0.0) {
    const double coupling =
        std::max(std::abs(cfg.constants.A), std::abs(cfg.constants.A_perp));
    if (coupling <= 0.0) {
      throw ConfigError(
          "reduction_t_max not set and hyperfine couplings are zero");
    }
    t_max = 10.0 / coupling;
  }
  const ReductionReport rep =
      validate_reduction(cfg.constants, t_max, cfg.reduction_steps);
  const nlohmann::json j = {{"trace_distance_max", rep.trace_distance_max},
                            {"leakage_max", rep.leakage_max},
                            {"detuning_ratio", rep.detuning_ratio},
                            {"valid", rep.valid},
                            {"t_max_s", t_max},
                            {"steps", cfg.reduction_steps}};
  const std::string text = io::dump_json(j);
  std::fputs(text.c_str(), stdout);
  io::write_text(out_path(cfg, "validate_model.json"), text);
  return rep.valid ? kExitOk : kExitModelInvalid;
}

int cmd_simulate(const RunConfig& cfg) {
  const std::uint64_t seed = require_seed(cfg);
  const ProtocolOutcome exact = run_hybrid_exact(cfg.sensor);
  const TrajectoryOutcome traj = run_hybrid_trajectories(
      cfg.sensor, cfg.trajectory_shots, derive_seed(seed, 1));

  EstimationRun est;
  est.params = cfg.sensor;
  est.repetitions = cfg.repetitions;
  est.seed = derive_seed(seed, 2);
  est = run_estimation(std::move(est));

  nlohmann::json j;
  j["params"] = sensor_json(cfg.sensor);
  j["seed"] = seed;
  j["exact"] = {{"p_click", exact.p_click},
                {"coherence", exact.coherence},
                {"accumulated_phase", exact.accumulated_phase},
                {"phase_wrap", exact.phase_wrap}};
  j["trajectories"] = {{"p_click", traj.p_click},
                       {"std_error", traj.std_error},
                       {"clicks", traj.clicks},
                       {"shots", traj.shots}};
  j["estimation"] = {{"repetitions", est.repetitions},
                     {"mean_estimate", est.mean_estimate},
                     {"empirical_std", est.empirical_std},
                     {"analytic_std", est.analytic_std},
                     {"clamp_count", est.clamp_count},
                     {"estimates", est.estimates}};
  io::write_text(out_path(cfg, "simulate.json"), io::dump_json(j));

  std::printf("p_click exact %s, trajectories %s +- %s (%ld shots)\n",
              io::format_double(exact.p_click).c_str(),
              io::format_double(traj.p_click).c_str(),
              io::format_double(traj.std_error).c_str(), traj.shots);
  std::printf("delta-omega empirical %s, analytic %s (%d repetitions)\n",
              io::format_double(est.empirical_std).c_str(),
              io::format_double(est.analytic_std).c_str(), est.repetitions);
  std::printf("wrote %s\n", out_path(cfg, "simulate.json").string().c_str());
  return kExitOk;
}

int cmd_sweep_n(const RunConfig& cfg) {
  const std::uint64_t seed = require_seed(cfg);
  const std::vector<int> n_list = parse_n_list(cfg.sweep_n_list);
  const std::vector<SweepRow> rows =
      sweep_n(cfg.sensor, n_list, cfg.repetitions, seed);

  const std::vector<std::string> header = {
      "scheme", "n", "alpha", "delta_omega_analytic",
      "delta_omega_empirical", "ratio_r"};
  std::vector<std::vector<std::string>> cells;
  cells.reserve(rows.size());
  for (const SweepRow& r : rows) {
    cells.push_back({r.scheme, std::to_string(r.n), io::csv_cell(r.alpha),
                     io::csv_cell(r.delta_omega_analytic),
                     io::csv_cell(r.delta_omega_empirical),
                     io::csv_cell(r.ratio_r)});
  }
  io::write_text(out_path(cfg, "sweep_n.csv"), io::to_csv(header, cells));
  std::printf("wrote %s\n", out_path(cfg, "sweep_n.csv").string().c_str());

  if (cfg.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const SweepRow& r : rows) {
      j.push_back({{"scheme", r.scheme},
                   {"n", r.n},
                   {"alpha", r.alpha},
                   {"delta_omega_analytic", r.delta_omega_analytic},
                   {"delta_omega_empirical", r.delta_omega_empirical},
                   {"ratio_r", r.ratio_r}});
    }
    nlohmann::json doc = {{"seed", seed}, {"rows", j}};
    io::write_text(out_path(cfg, "sweep_n.json"), io::dump_json(doc));
    std::printf("wrote %s\n", out_path(cfg, "sweep_n.json").string().c_str());
  }
  return kExitOk;
}

int cmd_figure3(const RunConfig& cfg) {
  const std::vector<double> grid =
      optimizer::log_grid(cfg.eps_lo, cfg.eps_hi, cfg.eps_points);
  const auto rows = optimizer::figure3_sweep(grid, cfg.n_max);

  const std::vector<std::string> header = {"epsilon", "r_star", "N_star",
                                           "alpha_star", "capped"};
  std::vector<std::vector<std::string>> cells;
  cells.reserve(rows.size());
  for (const auto& r : rows) {
    cells.push_back({io::csv_cell(r.epsilon), io::csv_cell(r.r_star),
                     std::to_string(r.n_star), io::csv_cell(r.alpha_star),
                     io::csv_cell(r.capped)});
  }
  io::write_text(out_path(cfg, "figure3.csv"), io::to_csv(header, cells));
  std::printf("wrote %s\n", out_path(cfg, "figure3.csv").string().c_str());

  if (cfg.format == "svg") {
    io::PlotSeries series;
    for (const auto& r : rows) {
      series.x.push_back(r.epsilon);
      series.y.push_back(r.r_star);
    }
    const std::string svg = io::svg_line_plot(
        "relative sensitivity vs gate error", "gate error",
        "r = conventional / hybrid uncertainty", series, /*log_x=*/true);
    io::write_text(out_path(cfg, "figure3.svg"), svg);
    std::printf("wrote %s\n", out_path(cfg, "figure3.svg").string().c_str());
  }
  if (cfg.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) {
      j.push_back({{"epsilon", r.epsilon},
                   {"r_star", r.r_star},
                   {"N_star", r.n_star},
                   {"alpha_star", r.alpha_star},
                   {"capped", r.capped}});
    }
    io::write_text(out_path(cfg, "figure3.json"), io::dump_json(j));
    std::printf("wrote %s\n", out_path(cfg, "figure3.json").string().c_str());
  }
  return kExitOk;
}

int cmd_time_budget(const RunConfig& cfg) {
  const analytics::TimeBudget budget = analytics::time_budget(
      cfg.sensor, cfg.tau_p, cfg.tau_w, cfg.tau_m, cfg.extended_budget);
  nlohmann::json j;
  j["budget"] = {{"t_cycle_hybrid", budget.t_cycle_hybrid},
                 {"t_cycle_conv", budget.t_cycle_conv},
                 {"tau_p", budget.tau_p},
                 {"tau_w", budget.tau_w},
                 {"tau_m", budget.tau_m},
                 {"degenerate", budget.degenerate},
                 {"extended", cfg.extended_budget}};
  const analytics::SensitivityReport fixed_shots =
      analytics::sensitivity_report(cfg.sensor);
  j["fixed_shots"] = {{"delta_omega", fixed_shots.delta_omega},
                      {"delta_omega_conv", fixed_shots.delta_omega_conv},
                      {"ratio_r", fixed_shots.ratio_r},
                      {"small_phase", fixed_shots.small_phase},
                      {"phase_wrap", fixed_shots.phase_wrap}};
  if (!budget.degenerate) {
    const analytics::SensitivityReport fixed_time =
        analytics::sensitivity_report(
            cfg.sensor, analytics::ReportMode::FixedTotalTime, &budget);
    j["fixed_total_time"] = {
        {"delta_omega_sqrt_s", fixed_time.delta_omega},
        {"delta_omega_conv_sqrt_s", fixed_time.delta_omega_conv},
        {"ratio_r", fixed_time.ratio_r}};
  }
  const std::string text = io::dump_json(j);
  std::fputs(text.c_str(), stdout);
  io::write_text(out_path(cfg, "time_budget.json"), text);
  return kExitOk;
}

int cmd_transcript(const RunConfig& cfg) {
  const nlohmann::json seq = transcript(cfg.sensor);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const auto& op = seq[i];
    std::string qubits;
    for (const auto& q : op["qubits"]) {
      if (!qubits.empty()) qubits += ",";
      qubits += q.get<int>() == 0 ? "e" : "n";
    }
    std::printf("%3zu  %-7s [%s]%s%s\n", i + 1,
                op["op"].get<std::string>().c_str(), qubits.c_str(),
                op["duration_s"].get<double>() > 0.0
                    ? ("  " + io::format_double(
                                  op["duration_s"].get<double>()) + " s")
                          .c_str()
                    : "",
                op["noisy"].get<bool>() ? "  (noisy)" : "");
  }
  io::write_text(out_path(cfg, "transcript.json"), io::dump_json(seq));
  std::printf("wrote %s\n", out_path(cfg, "transcript.json").string().c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hybrid electron-nuclear spin magnetometry toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed_flag;
  std::optional<std::string> out_flag;
  std::optional<std::string> format_flag;
  std::optional<long> shots_flag;
  std::optional<int> reps_flag;

  app.add_option("--config", config_path, "key-value run configuration file");
  app.add_option("--seed", seed_flag, "RNG seed (overrides [run] seed)");
  app.add_option("--out", out_flag, "output directory");
  app.add_option("--format", format_flag, "csv, json or svg")
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  app.add_option("--shots", shots_flag, "measurements per estimate");
  app.add_option("--reps", reps_flag, "estimation repetitions");

  auto* c_validate =
      app.add_subcommand("validate-model", "two-level reduction quality");
  auto* c_simulate =
      app.add_subcommand("simulate", "exact, trajectory and estimation runs");
  auto* c_sweep = app.add_subcommand("sweep-n", "uncertainty vs transfer count");
  auto* c_fig3 =
      app.add_subcommand("figure3", "optimized sensitivity gain vs gate error");
  auto* c_budget = app.add_subcommand("time-budget", "cycle-time comparison");
  auto* c_transcript =
      app.add_subcommand("transcript", "pulse sequence listing");

  // Let "nvsensor simulate --seed 42" find the global flags: without
  // fallthrough CLI11 only matches them before the subcommand name.
  for (CLI::App* sub : {c_validate, c_simulate, c_sweep, c_fig3, c_budget,
                        c_transcript}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {  // --help and friends
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) cfg = load_config(config_path);
    if (seed_flag) cfg.seed = *seed_flag;
    if (out_flag) cfg.out_dir = *out_flag;
    if (format_flag) cfg.format = *format_flag;
    if (shots_flag) cfg.sensor.shots = *shots_flag;
    if (reps_flag) cfg.repetitions = *reps_flag;

    if (c_validate->parsed()) return cmd_validate_model(cfg);
    if (c_simulate->parsed()) return cmd_simulate(cfg);
    if (c_sweep->parsed()) return cmd_sweep_n(cfg);
    if (c_fig3->parsed()) return cmd_figure3(cfg);
    if (c_budget->parsed()) return cmd_time_budget(cfg);
    if (c_transcript->parsed()) return cmd_transcript(cfg);
    return kExitUsage;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "invalid input: %s\n", e.what());
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "model/regime error: %s\n", e.what());
    return kExitModelInvalid;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitModelInvalid;
  }
}
