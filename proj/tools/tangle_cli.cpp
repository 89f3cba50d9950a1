// tangle: parameter sweeps, closed-form verification and the r(omega, a)
// conversion for the accelerated GHZ system.

#include <cstdio>
#include <exception>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tangle/rindler.hpp"
#include "tangle/sweep.hpp"

namespace {

using namespace tangle;

// Splice `key = value` lines from --config FILE in right after the
// subcommand name, so anything given explicitly on the command line wins.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  for (std::size_t i = 1; i + 1 < args.size(); ++i) {
    if (args[i] != "--config") continue;
    const auto extra = sweep::config_file_args(args[i + 1]);
    if (args.size() > 1) args.insert(args.begin() + 2, extra.begin(), extra.end());
    break;
  }
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement of a GHZ state shared with accelerated observers"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  std::string config_path;

  // sweep ------------------------------------------------------------------
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate every measure on a grid of r and write CSV");
  std::string scenario_name;
  sweep::SweepConfig config;
  bool degrees = false;
  sweep_cmd->add_option("--scenario", scenario_name, "one (Charlie accelerated) or two (Bob and Charlie)")
      ->required()
      ->check(CLI::IsMember({"one", "two"}));
  sweep_cmd->add_flag("--diagonal", config.diagonal, "two-accelerated only: r_b = r_c = r");
  sweep_cmd->add_option("--r-min", config.r_min, "lower end of the r grid (radians)")->capture_default_str();
  sweep_cmd->add_option("--r-max", config.r_max, "upper end of the r grid (radians)")->capture_default_str();
  sweep_cmd->add_option("--steps", config.steps, "grid points per axis, endpoints included")->capture_default_str();
  sweep_cmd->add_option("--out", config.output, "CSV path, '-' for stdout")->required();
  sweep_cmd->add_option("--threads", config.threads, "worker threads")->capture_default_str();
  sweep_cmd->add_flag("--degrees", degrees, "interpret --r-min/--r-max in degrees");
  sweep_cmd->add_option("--config", config_path, "key = value file mirroring these flags");

  // verify -----------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "Compare the numeric pipeline with the closed forms");
  double tolerance = 1e-10;
  int verify_steps = 65;
  verify_cmd->add_option("--tolerance", tolerance, "maximum accepted |numeric - analytic|")->capture_default_str();
  verify_cmd->add_option("--steps", verify_steps, "grid points per axis")->capture_default_str();
  verify_cmd->add_option("--config", config_path, "key = value file mirroring these flags");

  // r-of -------------------------------------------------------------------
  auto* r_cmd = app.add_subcommand("r-of", "Acceleration parameter r for mode frequency and acceleration");
  double omega = 0.0, accel = 0.0, light = 1.0;
  r_cmd->add_option("--omega", omega, "mode angular frequency")->required();
  r_cmd->add_option("--accel", accel, "proper acceleration")->required();
  r_cmd->add_option("--c", light, "speed of light")->capture_default_str();
  r_cmd->add_option("--config", config_path, "key = value file mirroring these flags");

  try {
    auto args = expand_config(argc, argv);
    std::vector<char*> raw;
    for (auto& a : args) raw.push_back(a.data());
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? sweep::kExitOk : sweep::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return sweep::kExitUsage;
  }

  try {
    if (*sweep_cmd) {
      config.scenario = scenario_name == "one" ? ScenarioKind::one_accelerated
                                               : ScenarioKind::two_accelerated;
      if (degrees) {
        config.r_min *= std::numbers::pi / 180.0;
        config.r_max *= std::numbers::pi / 180.0;
      }
      const auto records = sweep::run_sweep(config);
      if (config.output == "-") {
        sweep::emit_csv(records, std::cout);
      } else {
        sweep::emit_csv(records, std::filesystem::path(config.output));
      }
      return sweep::kExitOk;
    }
    if (*verify_cmd) {
      const auto report = sweep::verify(tolerance, verify_steps);
      std::cout << report.text;
      return report.exit_code;
    }
    if (*r_cmd) {
      const AccelerationParam r = acceleration_to_r(omega, accel, light);
      std::printf("r = %.12f\ncos r = %.12f\n", r.value(), r.cos());
      return sweep::kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return sweep::kExitUsage;
  }
  return sweep::kExitUsage;
}
