#pragma once

#include <optional>
#include <string>
#include <vector>

namespace netblaze {

/// Parsed command line of the `netblaze` tool.
struct RunConfig {
  std::string command;  // distance | evolve | front | block | verify | cost
  std::string network_path;
  std::string scenario_path;
  std::string weights_path;  // cost only
  std::string out_dir;
  double h_target = 0.25;
  std::vector<double> times;                     // evolve / front snapshots
  std::optional<std::vector<int>> override_sigma;  // block: forced strategy
};

/// Executes a run, writing all outputs under out_dir. Returns the process
/// exit code: 0 ok, 2 config/parse error, 3 solver error, 4 verification
/// failure. Failures print a one-line error JSON to stderr.
int run(const RunConfig& config);

/// argv front end (CLI11). Returns the exit code.
int run_cli(int argc, char** argv);

}  // namespace netblaze
