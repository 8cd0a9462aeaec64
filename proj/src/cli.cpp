#include "netblaze/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>

#include "CLI11.hpp"
#include "netblaze/io.hpp"
#include "netblaze/svg.hpp"

namespace netblaze {

namespace {

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::schema_violation:
    case Errc::bad_config:
    case Errc::io_error:
    case Errc::invalid_spec:
    case Errc::dangling_edge_endpoint:
    case Errc::non_positive_length:
    case Errc::self_loop:
    case Errc::disconnected_graph:
    case Errc::non_positive_slowness:
      return 2;
    default:
      return 3;  // solver-side failures
  }
}

struct LoadedRun {
  Network net;
  Grid grid;
  SlownessField slowness;
  Scenario scenario;
};

LoadedRun load(const RunConfig& cfg) {
  if (!(cfg.h_target > 0)) fail(Errc::bad_config, "--h must be > 0");
  if (!std::is_sorted(cfg.times.begin(), cfg.times.end()))
    fail(Errc::bad_config, "--times must be ascending");
  for (double t : cfg.times)
    if (t < 0) fail(Errc::bad_config, "--times must be >= 0");

  Network net = read_network_file(cfg.network_path);
  ScenarioFile sf = read_scenario_file(cfg.scenario_path, net);
  Grid grid = discretize(net, cfg.h_target);
  SlownessField slowness = make_slowness(grid, sf.slowness);
  return {std::move(net), std::move(grid), std::move(slowness),
          std::move(sf.scenario)};
}

std::string out_path(const RunConfig& cfg, const std::string& name) {
  return (std::filesystem::path(cfg.out_dir) / name).string();
}

std::vector<double> snapshot_times(const RunConfig& cfg,
                                   const NodeField& field) {
  if (!cfg.times.empty()) return cfg.times;
  double vmax = 0;
  for (double v : field.values)
    if (v != kUnreached) vmax = std::max(vmax, v);
  std::vector<double> ts;
  for (int i = 0; i <= 4; ++i) ts.push_back(i * vmax / 4);
  return ts;
}

std::string snapshot_name(const char* stem, std::size_t k) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s_%03zu.csv", stem, k);
  return buf;
}

int cmd_distance(const RunConfig& cfg, const LoadedRun& run) {
  const SourceSet src = make_source_set(run.grid, run.scenario.r0);
  const NodeField u = solve_distance(run.grid, run.slowness, src);
  write_text_atomic(out_path(cfg, "u.csv"), field_csv(run.grid, u));
  Scene scene;
  scene.grid = &run.grid;
  scene.field = &u;
  scene.source_nodes = src.nodes;
  write_text_atomic(out_path(cfg, "scene.svg"), render_svg(scene));
  return 0;
}

int cmd_front(const RunConfig& cfg, const LoadedRun& run) {
  const SourceSet src = make_source_set(run.grid, run.scenario.r0);
  const NodeField u = solve_distance(run.grid, run.slowness, src);
  const std::vector<double> times = snapshot_times(cfg, u);
  std::vector<double> burnt;
  for (std::size_t k = 0; k < times.size(); ++k) {
    const FrontSnapshot snap = front_from_field(run.grid, u, times[k]);
    burnt.push_back(snap.burnt_length);
    write_text_atomic(out_path(cfg, snapshot_name("front", k)),
                      front_csv(run.grid, u, times[k]));
  }
  write_text_atomic(
      out_path(cfg, "front_manifest.json"),
      front_manifest_json(times, run.net.total_length(), burnt));
  return 0;
}

int cmd_evolve(const RunConfig& cfg, const LoadedRun& run) {
  const SourceSet src = make_source_set(run.grid, run.scenario.r0);
  // Indicator-style datum: 0 on the fire set, 1 elsewhere; the zero sublevel
  // set of the evolved solution is then the burnt region.
  std::vector<double> u0(run.grid.num_nodes(), 1.0);
  for (int n : src.nodes) u0[n] = 0.0;
  const EvolvedSolution sol = evolve(run.grid, run.slowness, u0, true);

  std::vector<double> times = cfg.times;
  if (times.empty()) {
    const NodeField u = solve_distance(run.grid, run.slowness, src);
    times = snapshot_times(cfg, u);
  }
  for (std::size_t k = 0; k < times.size(); ++k)
    write_text_atomic(out_path(cfg, snapshot_name("evolve", k)),
                      evolve_csv(run.grid, sol, times[k]));
  write_text_atomic(out_path(cfg, "evolve_manifest.json"),
                    evolve_manifest_json(times, sol));
  return 0;
}

int cmd_block(const RunConfig& cfg, const LoadedRun& run) {
  const SourceSet src = make_source_set(run.grid, run.scenario.r0);
  const NodeField u = solve_distance(run.grid, run.slowness, src);
  const NodeField w =
      solve_operator_field(run.grid, run.scenario.x0, run.scenario.delta);
  const std::vector<int> v_ad = admissible_vertices(run.grid, u, w);

  Strategy sigma;
  bool allow_inadmissible = false;
  if (cfg.override_sigma) {
    sigma.vertices = *cfg.override_sigma;
    std::sort(sigma.vertices.begin(), sigma.vertices.end());
    sigma.vertices.erase(
        std::unique(sigma.vertices.begin(), sigma.vertices.end()),
        sigma.vertices.end());
    for (int v : sigma.vertices)
      if (v < 0 || v >= run.net.num_vertices())
        fail(Errc::bad_config, "--override-sigma: unknown vertex id");
    allow_inadmissible = true;
  } else {
    sigma = optimal_strategy(run.net, v_ad);
  }

  const BlockReport report =
      block_report(run.grid, run.slowness, run.scenario, sigma,
                   allow_inadmissible);
  write_text_atomic(out_path(cfg, "u.csv"), field_csv(run.grid, u));
  write_text_atomic(out_path(cfg, "w.csv"), field_csv(run.grid, w));
  write_text_atomic(out_path(cfg, "report.json"),
                    report_json(run.net, report));

  Scene scene;
  scene.grid = &run.grid;
  scene.field = &report.field;
  scene.source_nodes = src.nodes;
  scene.square_vertices = report.sigma.vertices;
  scene.edge_burnt.assign(run.net.num_edges(), 0);
  for (int j : report.burnt_edges) scene.edge_burnt[j] = 1;
  scene.classified = true;
  write_text_atomic(out_path(cfg, "scene.svg"), render_svg(scene));
  return 0;
}

int cmd_verify(const RunConfig& cfg, const LoadedRun& run) {
  const OptimalityCheck check =
      verify_optimality(run.grid, run.slowness, run.scenario, true);
  const SourceSet src = make_source_set(run.grid, run.scenario.r0);
  const NodeField u = solve_distance(run.grid, run.slowness, src);
  const NodeField w =
      solve_operator_field(run.grid, run.scenario.x0, run.scenario.delta);
  const std::vector<int> v_ad = admissible_vertices(run.grid, u, w);
  const Strategy sigma_opt = optimal_strategy(run.net, v_ad);
  write_text_atomic(out_path(cfg, "verify.json"),
                    verify_json(check, v_ad, sigma_opt));
  if (!check.ok) {
    std::string witness = "[";
    for (std::size_t i = 0; i < check.witness.vertices.size(); ++i) {
      if (i) witness += ",";
      witness += std::to_string(check.witness.vertices[i]);
    }
    witness += "]";
    std::fputs(error_json("VerificationFailed",
                          "a strategy preserves an edge sigma_opt burns; "
                          "witness sigma = " + witness)
                   .c_str(),
               stderr);
    return 4;
  }
  return 0;
}

int cmd_cost(const RunConfig& cfg, const LoadedRun& run) {
  if (cfg.weights_path.empty())
    fail(Errc::bad_config, "cost requires --weights");
  const CostWeights weights = read_weights_file(cfg.weights_path, run.net);
  const CostResult result =
      cost_optimal_strategy(run.grid, run.slowness, run.scenario, weights, true);
  const BlockReport report =
      block_report(run.grid, run.slowness, run.scenario, result.sigma);
  write_text_atomic(out_path(cfg, "cost.json"), cost_json(result, report));
  return 0;
}

}  // namespace

int run(const RunConfig& cfg) {
  try {
    if (cfg.out_dir.empty()) fail(Errc::bad_config, "--out is required");
    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    if (ec) fail(Errc::io_error, "cannot create " + cfg.out_dir);

    const LoadedRun loaded = load(cfg);
    if (cfg.command == "distance") return cmd_distance(cfg, loaded);
    if (cfg.command == "evolve") return cmd_evolve(cfg, loaded);
    if (cfg.command == "front") return cmd_front(cfg, loaded);
    if (cfg.command == "block") return cmd_block(cfg, loaded);
    if (cfg.command == "verify") return cmd_verify(cfg, loaded);
    if (cfg.command == "cost") return cmd_cost(cfg, loaded);
    fail(Errc::bad_config, "unknown command " + cfg.command);
  } catch (const Error& e) {
    std::fputs(error_json(errc_name(e.code()), e.what()).c_str(), stderr);
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::fputs(error_json("InternalError", e.what()).c_str(), stderr);
    return 3;
  }
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Front propagation and junction blocking on metric networks"};
  app.set_help_flag("--help", "print usage and exit");
  app.require_subcommand(1);

  RunConfig cfg;
  std::string times_arg, sigma_arg;
  auto add_common = [&](CLI::App* sub) {
    sub->set_help_flag("--help", "print usage and exit");
    sub->add_option("--network", cfg.network_path, "network JSON file")
        ->required();
    sub->add_option("--scenario", cfg.scenario_path, "scenario JSON file")
        ->required();
    sub->add_option("--h", cfg.h_target, "target grid spacing")->required();
    sub->add_option("--out", cfg.out_dir, "output directory")->required();
    sub->add_option("--times", times_arg, "comma-separated snapshot times");
  };

  for (const char* name : {"distance", "evolve", "front", "block", "verify",
                           "cost"}) {
    CLI::App* sub = app.add_subcommand(name);
    add_common(sub);
    if (std::string(name) == "block")
      sub->add_option("--override-sigma", sigma_arg,
                      "comma-separated vertex ids to block instead of the "
                      "frontier strategy");
    if (std::string(name) == "cost")
      sub->add_option("--weights", cfg.weights_path, "cost weights JSON file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::fputs(error_json("BadConfig", e.what()).c_str(), stderr);
    return 2;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  try {
    if (!times_arg.empty()) {
      for (std::size_t pos = 0; pos < times_arg.size();) {
        std::size_t comma = times_arg.find(',', pos);
        if (comma == std::string::npos) comma = times_arg.size();
        cfg.times.push_back(std::stod(times_arg.substr(pos, comma - pos)));
        pos = comma + 1;
      }
    }
    if (!sigma_arg.empty()) {
      std::vector<int> ids;
      for (std::size_t pos = 0; pos < sigma_arg.size();) {
        std::size_t comma = sigma_arg.find(',', pos);
        if (comma == std::string::npos) comma = sigma_arg.size();
        ids.push_back(std::stoi(sigma_arg.substr(pos, comma - pos)));
        pos = comma + 1;
      }
      cfg.override_sigma = std::move(ids);
    }
  } catch (const std::exception&) {
    std::fputs(error_json("BadConfig", "malformed numeric list").c_str(),
               stderr);
    return 2;
  }
  return run(cfg);
}

}  // namespace netblaze
