// Acceptance gate: ten checks, one pass/fail line each, nonzero exit if any
// fails. Heavier than the unit suite: oracle sweeps over random networks,
// exhaustive strategy enumerations, and byte-comparisons of repeated CLI
// runs on the shipped fixtures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "netblaze/blocking.hpp"
#include "netblaze/fixed_point.hpp"
#include "netblaze/hopflax.hpp"
#include "netblaze/io.hpp"
#include "netblaze/solve.hpp"
#include "testutil.hpp"

using namespace netblaze;
namespace fs = std::filesystem;

namespace {

struct Gate {
  struct Line {
    int id;
    bool pass;
    std::string note;
    double secs;
  };
  std::vector<Line> lines;

  void run(int id, const std::string& what, const std::function<bool()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string note = what;
    try {
      pass = f();
    } catch (const std::exception& e) {
      note += std::string(" [exception: ") + e.what() + "]";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    lines.push_back({id, pass, note, secs});
  }

  int print() {
    std::sort(lines.begin(), lines.end(),
              [](const Line& a, const Line& b) { return a.id < b.id; });
    int failures = 0;
    for (const Line& l : lines) {
      std::printf("criterion %2d: %s %s (%.1fs)\n", l.id,
                  l.pass ? "PASS" : "FAIL", l.note.c_str(), l.secs);
      if (!l.pass) ++failures;
    }
    return failures;
  }
};

std::string fixture(const std::string& name) {
  return std::string(NETBLAZE_FIXTURES) + "/" + name;
}

// Every blocking report produced anywhere in this binary lands here so the
// conservation criterion can audit all of them.
struct Emitted {
  double burnt;
  double preserved;
  double total;
  bool has_edge_list;
  std::vector<int> burnt_edges;
  const Network* net;
};
std::vector<Emitted> g_reports;
std::deque<Network> g_report_nets;  // stable addresses for Emitted::net

const BlockReport& record(const Network& net, const BlockReport& rep) {
  g_report_nets.push_back(net);
  g_reports.push_back({rep.burnt_length, rep.preserved_length,
                       g_report_nets.back().total_length(), true,
                       rep.burnt_edges, &g_report_nets.back()});
  return rep;
}

Scenario vertex_fire(int v, int x0, double delta) {
  Scenario sc;
  sc.r0 = {Location::at_vertex(v)};
  sc.x0 = x0;
  sc.delta = delta;
  return sc;
}

double min_edge_length(const Network& net) {
  double m = net.edge(0).length;
  for (int j = 1; j < net.num_edges(); ++j)
    m = std::min(m, net.edge(j).length);
  return m;
}

// --------------------------------------------------------------- criterion 1
bool oracle_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto g = testutil::rng(3000 + s);
    testutil::GenOptions o;
    o.min_vertices = 10;
    o.max_vertices = 30;
    o.extra_edges = 20;
    o.pow2_lengths = false;
    const Network net = testutil::random_network(g, o);
    if (net.num_edges() > 60) return false;
    const Grid grid = discretize(net, min_edge_length(net) / 4);
    const SlownessField c = testutil::random_slowness(g, grid);
    const int fire = testutil::rand_int(g, 0, net.num_vertices() - 1);
    SourceSet src;
    src.nodes = {fire};

    // First-arrival distances.
    const NodeField u = solve_distance(grid, c, src);
    const auto arcs = testutil::oracle_arcs(grid, c);
    const auto ref = testutil::oracle_bellman_ford(grid, arcs, src.nodes);
    for (int n = 0; n < grid.num_nodes(); ++n)
      if (u.values[n] != ref[n]) return false;

    // Operator field: constant slowness delta from x0.
    const int x0 = testutil::rand_int(g, 0, net.num_vertices() - 1);
    const double delta = testutil::rand_dyadic(g, 0.0, 2.0, 16);
    const NodeField w = solve_operator_field(grid, x0, delta);
    if (delta == 0) {
      for (double v : w.values)
        if (v != 0) return false;
    } else {
      const SlownessField cd = SlownessField::constant(grid, delta);
      const auto arcs_d = testutil::oracle_arcs(grid, cd);
      const auto ref_w = testutil::oracle_bellman_ford(grid, arcs_d, {x0});
      for (int n = 0; n < grid.num_nodes(); ++n)
        if (w.values[n] != ref_w[n]) return false;
    }

    // Blocked solve with the frontier strategy of this scenario.
    Scenario sc = vertex_fire(fire, x0, delta);
    const NodeField wf = solve_operator_field(grid, sc.x0, sc.delta);
    const Strategy sigma =
        optimal_strategy(net, admissible_vertices(grid, u, wf));
    const NodeField ub =
        solve_blocked_distance(grid, c, src, sigma.vertices);
    std::vector<char> mask(grid.num_nodes(), 0);
    for (int v : sigma.vertices) mask[v] = 1;
    const auto ref_b =
        testutil::oracle_bellman_ford(grid, arcs, src.nodes, mask);
    for (int n = 0; n < grid.num_nodes(); ++n) {
      if (mask[n]) {
        if (u.values[n] == kUnreached && ub.values[n] != kUnreached)
          return false;
        continue;
      }
      if (ub.values[n] != ref_b[n]) return false;
    }
    // One-sided values at blocked vertices, rebuilt from the oracle field.
    for (int v : sigma.vertices) {
      const BlockedVertexValue* bv = ub.blocked_at(v);
      if (!bv || ub.values[v] != kUnreached) return false;
      std::size_t i = 0;
      for (const IncidentEdge& ie : net.incident(v)) {
        const int m = grid.segments(ie.edge);
        const int nb = ie.sign > 0 ? grid.node_at(ie.edge, 1)
                                   : grid.node_at(ie.edge, m - 1);
        double want = kUnreached;
        const double base = mask[nb] ? kUnreached : ref_b[nb];
        if (base != kUnreached)
          want = base + grid.step(ie.edge) * c.at(v, ie.edge);
        if (i >= bv->per_edge.size() || bv->per_edge[i].edge != ie.edge ||
            bv->per_edge[i].value != want)
          return false;
        ++i;
      }
      if (i != bv->per_edge.size()) return false;
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return secs < 10.0;
}

// --------------------------------------------------------------- criterion 2
bool metric_equivalence() {
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto g = testutil::rng(3100 + s);
    const Network net = testutil::random_network(g);  // pow2 lengths
    const Grid grid = discretize(net, 0.125);
    const SlownessField c = testutil::random_slowness(g, grid, 0.2, 5.0);
    SourceSet src;
    src.nodes = {testutil::rand_int(g, 0, net.num_vertices() - 1)};
    const NodeField u = solve_distance(grid, c, src);
    const NodeField d =
        solve_distance(grid, SlownessField::constant(grid, 1.0), src);
    for (int n = 0; n < grid.num_nodes(); ++n) {
      if (!(c.min() * d.values[n] <= u.values[n])) return false;
      if (!(u.values[n] <= c.max() * d.values[n])) return false;
    }
  }
  return true;
}

// --------------------------------------------------------------- criterion 3
bool comparison_principle() {
  int pairs = 0;
  for (std::uint64_t s = 0; pairs < 25; ++s) {
    auto g = testutil::rng(3200 + s);
    const Network net = testutil::random_network(g);
    const Grid grid = discretize(net, 0.25);
    const SlownessField c = testutil::random_slowness(g, grid);
    for (int rep = 0; rep < 5 && pairs < 25; ++rep, ++pairs) {
      std::vector<double> u0(grid.num_nodes()), v0(grid.num_nodes());
      for (int n = 0; n < grid.num_nodes(); ++n) {
        u0[n] = testutil::rand_dyadic(g, 0.0, 8.0, 32);
        v0[n] = u0[n] + testutil::rand_dyadic(g, 0.0, 2.0, 32);
      }
      const EvolvedSolution a = evolve(grid, c, u0);
      const EvolvedSolution b = evolve(grid, c, v0);
      double tmax = 0;
      for (int k = 0; k < a.num_levels(); ++k)
        for (double t : a.level_times(k))
          if (t != kUnreached) tmax = std::max(tmax, t);
      for (int i = 0; i < 10; ++i) {
        const double t = i * tmax / 9;
        for (int n = 0; n < grid.num_nodes(); ++n)
          if (!(a.value_at(n, t) <= b.value_at(n, t))) return false;
      }
    }
  }
  return true;
}

// --------------------------------------------------------------- criterion 4
bool relabel_commutes() {
  for (std::uint64_t s = 0; s < 5; ++s) {
    auto g = testutil::rng(3300 + s);
    const Network net = testutil::random_network(g);
    const Grid grid = discretize(net, 0.25);
    const SlownessField c = testutil::random_slowness(g, grid);
    std::vector<double> u0(grid.num_nodes());
    for (double& v : u0) v = testutil::rand_dyadic(g, 0.0, 8.0, 32);
    for (int rep = 0; rep < 20; ++rep) {
      const int k = testutil::rand_int(g, 2, 6);
      std::vector<double> xs, ys;
      double x = -1.0, y = testutil::rand_dyadic(g, 0.0, 2.0, 16);
      for (int i = 0; i < k; ++i) {
        xs.push_back(x);
        ys.push_back(y);
        x += testutil::rand_dyadic(g, 0.25, 4.0, 16);
        y += testutil::rand_dyadic(g, 0.0, 3.0, 16);
      }
      if (!relabel_check(grid, c, u0, MonotoneMap(xs, ys))) return false;
    }
  }
  return true;
}

// --------------------------------------------------------------- criterion 5
bool time_lipschitz() {
  for (std::uint64_t s = 0; s < 5; ++s) {
    auto g = testutil::rng(3400 + s);
    const Network net = testutil::random_network(g);
    const Grid grid = discretize(net, 0.25);
    // Slowness capped at 1 keeps the half-step error within L*h_max/c_min.
    const SlownessField c = testutil::random_slowness(g, grid, 0.25, 1.0);
    const double L = testutil::rand_dyadic(g, 0.25, 2.0, 16);
    const int root = testutil::rand_int(g, 0, net.num_vertices() - 1);
    const std::vector<double> d = testutil::grid_distance_from(grid, root);
    std::vector<double> u0(grid.num_nodes());
    for (int n = 0; n < grid.num_nodes(); ++n) u0[n] = L * d[n];

    const EvolvedSolution sol = evolve(grid, c, u0);
    double tmax = 0;
    for (int k = 0; k < sol.num_levels(); ++k)
      for (double t : sol.level_times(k))
        if (t != kUnreached) tmax = std::max(tmax, t);
    const double tau = std::ldexp(1.0, int(std::floor(std::log2(
                                      std::max(tmax, 1e-9) / 20))));
    const double budget = L * (tau + grid.max_step());
    for (int j = 0; j < 20; ++j) {
      const double t = j * tau;
      for (int n = 0; n < grid.num_nodes(); ++n) {
        const double a = sol.value_at(n, t);
        const double b = sol.value_at(n, t + tau);
        if (!((a - b) * c.min() <= budget)) return false;
      }
    }
  }
  return true;
}

// --------------------------------------------------------------- criterion 6
bool strategy_optimality() {
  const auto t0 = std::chrono::steady_clock::now();
  int done = 0;
  for (std::uint64_t s = 0; done < 25 && s < 400; ++s) {
    auto g = testutil::rng(3500 + s);
    testutil::GenOptions o;
    o.min_vertices = 4;
    o.max_vertices = 10;
    o.extra_edges = 4;
    const Network net = testutil::random_network(g, o);
    const Grid grid = discretize(net, 0.25);
    const SlownessField c = testutil::random_slowness(g, grid);
    Scenario sc = vertex_fire(testutil::rand_int(g, 0, net.num_vertices() - 1),
                              testutil::rand_int(g, 0, net.num_vertices() - 1),
                              testutil::rand_dyadic(g, 0.25, 2.0, 16));
    SourceSet src = make_source_set(grid, sc.r0);
    const NodeField u = solve_distance(grid, c, src);
    NodeField w = solve_operator_field(grid, sc.x0, sc.delta);
    for (int tries = 0;
         admissible_vertices(grid, u, w).size() > 12 && tries < 6; ++tries) {
      sc.delta *= 2;
      w = solve_operator_field(grid, sc.x0, sc.delta);
    }
    if (admissible_vertices(grid, u, w).size() > 12) continue;
    const OptimalityCheck check = verify_optimality(grid, c, sc, true);
    if (!check.ok) return false;
    const Strategy sigma =
        optimal_strategy(net, admissible_vertices(grid, u, w));
    record(net, block_report(grid, c, sc, sigma));
    ++done;
  }
  if (done != 25) return false;

  // The three shipped scenario fixtures.
  const struct {
    const char* net;
    const char* fire;
  } shipped[] = {{"star_loop.json", "star_loop_fire.json"},
                 {"city_mesh.json", "city_mesh_fire.json"},
                 {"city_mesh.json", "city_mesh_fire_alt.json"}};
  for (const auto& f : shipped) {
    const Network net = read_network_file(fixture(f.net));
    const ScenarioFile sf = read_scenario_file(fixture(f.fire), net);
    const Grid grid = discretize(net, 0.25);
    const SlownessField c = make_slowness(grid, sf.slowness);
    const OptimalityCheck check = verify_optimality(grid, c, sf.scenario, true);
    if (!check.ok) return false;
    SourceSet src = make_source_set(grid, sf.scenario.r0);
    const NodeField u = solve_distance(grid, c, src);
    const NodeField w =
        solve_operator_field(grid, sf.scenario.x0, sf.scenario.delta);
    const Strategy sigma =
        optimal_strategy(net, admissible_vertices(grid, u, w));
    record(net, block_report(grid, c, sf.scenario, sigma));
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return secs < 60.0;
}

// --------------------------------------------------------------- criterion 7
bool convergence_order() {
  const Network net =
      build_network({{0, {1, 0}}, {1, {2, 0}}}, {{0, 0, 1, 1.0}});
  double prev_err = 0;
  for (int k = 3; k <= 6; ++k) {
    const double h = std::ldexp(1.0, -k);
    const Grid grid = discretize(net, h);
    const SlownessField c = SlownessField::euclidean_norm(grid);
    SourceSet src;
    src.nodes = {0};
    const NodeField u = solve_distance(grid, c, src);
    const double err = std::abs(u.values[1] - 1.5);
    if (err == 0) return false;  // first order, not superconvergence
    if (k > 3 && !(std::log2(prev_err / err) >= 0.9)) return false;
    prev_err = err;
  }
  return true;
}

// --------------------------------------------------------------- criterion 8
bool mesh_scenario_structure() {
  const Network net = read_network_file(fixture("city_mesh.json"));
  const Grid grid = discretize(net, 0.25);

  auto solve_case = [&](const char* fire, std::vector<int>& v_ad_out,
                        double& preserved_out) {
    const ScenarioFile sf = read_scenario_file(fixture(fire), net);
    const SlownessField c = make_slowness(grid, sf.slowness);
    SourceSet src = make_source_set(grid, sf.scenario.r0);
    const NodeField u = solve_distance(grid, c, src);
    const NodeField w =
        solve_operator_field(grid, sf.scenario.x0, sf.scenario.delta);
    v_ad_out = admissible_vertices(grid, u, w);

    // Independent frontier recomputation.
    std::vector<char> adm(net.num_vertices(), 0);
    for (int v : v_ad_out) adm[v] = 1;
    std::set<int> frontier;
    for (int v : v_ad_out)
      for (const IncidentEdge& ie : net.incident(v)) {
        const Edge& e = net.edge(ie.edge);
        const int other = e.tail == v ? e.head : e.tail;
        if (!adm[other]) frontier.insert(v);
      }
    const Strategy sigma = optimal_strategy(net, v_ad_out);
    if (std::vector<int>(frontier.begin(), frontier.end()) != sigma.vertices)
      return false;

    const BlockReport rep =
        record(net, block_report(grid, c, sf.scenario, sigma));
    preserved_out = rep.preserved_length;

    // Separator property: with sigma removed, the burnt edges are exactly
    // those still reachable from the ignition set.
    std::vector<char> blocked(grid.num_nodes(), 0);
    for (int v : sigma.vertices) blocked[v] = 1;
    const std::vector<char> seen =
        testutil::oracle_reachable(grid, src.nodes, blocked);
    std::vector<char> burnt(net.num_edges(), 0);
    for (int j : rep.burnt_edges) burnt[j] = 1;
    for (int j = 0; j < net.num_edges(); ++j) {
      bool reach = false;
      for (int i = 1; i < grid.segments(j); ++i)
        if (seen[grid.node_at(j, i)]) reach = true;
      if (!blocked[net.edge(j).tail] && seen[net.edge(j).tail]) reach = true;
      if (!blocked[net.edge(j).head] && seen[net.edge(j).head]) reach = true;
      if (int(burnt[j]) != int(reach)) return false;
    }
    return true;
  };

  std::vector<int> v_ad_main, v_ad_alt;
  double preserved_main = 0, preserved_alt = 0;
  if (!solve_case("city_mesh_fire.json", v_ad_main, preserved_main))
    return false;
  if (!solve_case("city_mesh_fire_alt.json", v_ad_alt, preserved_alt))
    return false;

  // Moving the ignition next to the operator shrinks both the admissible
  // set and the preserved length.
  if (!(v_ad_alt.size() < v_ad_main.size())) return false;
  if (!(preserved_alt < preserved_main)) return false;
  if (!(preserved_main > 0)) return false;
  return true;
}

// --------------------------------------------------------------- criterion 9
bool conservation() {
  if (g_reports.empty()) return false;
  for (const Emitted& r : g_reports) {
    if (r.burnt + r.preserved != r.total) return false;
    if (!r.has_edge_list) continue;
    double burnt = 0;
    for (int j : r.burnt_edges) burnt += r.net->edge(j).length;
    if (burnt != r.burnt) return false;
  }
  return true;
}

// -------------------------------------------------------------- criterion 10
bool run_cli(const std::string& args) {
  const std::string cmd = std::string(NETBLAZE_EXE) + " " + args +
                          " > /dev/null 2> /dev/null";
  return std::system(cmd.c_str()) == 0;
}

bool dirs_byte_identical(const fs::path& a, const fs::path& b) {
  std::vector<std::string> names_a, names_b;
  for (const auto& e : fs::directory_iterator(a))
    names_a.push_back(e.path().filename().string());
  for (const auto& e : fs::directory_iterator(b))
    names_b.push_back(e.path().filename().string());
  std::sort(names_a.begin(), names_a.end());
  std::sort(names_b.begin(), names_b.end());
  if (names_a != names_b || names_a.empty()) return false;
  for (const std::string& n : names_a)
    if (read_text_file((a / n).string()) != read_text_file((b / n).string()))
      return false;
  return true;
}

bool determinism() {
  const fs::path base = fs::temp_directory_path() / "netblaze_acceptance";
  fs::remove_all(base);
  fs::create_directories(base);

  struct Case {
    const char* tag;
    std::string args;
  };
  const std::string star = " --network " + fixture("star_loop.json") +
                           " --scenario " + fixture("star_loop_fire.json");
  const std::string city = " --network " + fixture("city_mesh.json") +
                           " --scenario " + fixture("city_mesh_fire.json");
  const std::string alt = " --network " + fixture("city_mesh.json") +
                          " --scenario " + fixture("city_mesh_fire_alt.json");
  const std::vector<Case> cases = {
      {"star_block", "block" + star + " --h 0.25"},
      {"star_distance", "distance" + star + " --h 0.25"},
      {"star_front", "front" + star + " --h 0.25 --times 0,1,2,3,4"},
      {"star_evolve", "evolve" + star + " --h 0.25 --times 0,1,2,3,4"},
      {"star_verify", "verify" + star + " --h 0.25"},
      {"city_block", "block" + city + " --h 0.25"},
      {"city_verify", "verify" + city + " --h 0.25"},
      {"city_cost", "cost" + city + " --h 0.25 --weights " +
                        fixture("city_mesh_weights.json")},
      {"alt_block", "block" + alt + " --h 0.25"},
  };
  for (const Case& c : cases) {
    const fs::path da = base / (std::string(c.tag) + "_a");
    const fs::path db = base / (std::string(c.tag) + "_b");
    if (!run_cli(c.args + " --out " + da.string())) return false;
    if (!run_cli(c.args + " --out " + db.string())) return false;
    if (!dirs_byte_identical(da, db)) return false;
  }

  // CLI-emitted blocking reports join the conservation audit.
  for (const char* tag : {"star_block", "city_block", "alt_block"}) {
    const fs::path dir = base / (std::string(tag) + "_a");
    const std::string net_file =
        std::string(tag) == "star_block" ? "star_loop.json" : "city_mesh.json";
    const Network net = read_network_file(fixture(net_file));
    const std::string text = read_text_file((dir / "report.json").string());
    // Minimal field scrape; the format is our own.
    auto grab = [&](const char* key) {
      const auto pos = text.find(std::string("\"") + key + "\": ");
      return std::stod(text.substr(pos + std::string(key).size() + 4));
    };
    const double burnt = grab("burnt_length");
    const double preserved = grab("preserved_length");
    Emitted e;
    e.burnt = burnt;
    e.preserved = preserved;
    e.has_edge_list = false;
    g_report_nets.push_back(net);
    e.total = g_report_nets.back().total_length();
    e.net = &g_report_nets.back();
    g_reports.push_back(e);
  }
  return true;
}

}  // namespace

int main() {
  Gate gate;
  gate.run(1, "oracle equivalence on 10 random networks, 0 tolerance",
           oracle_equivalence);
  gate.run(2, "metric equivalence bounds, exact comparisons",
           metric_equivalence);
  gate.run(3, "comparison principle on 25 ordered datum pairs",
           comparison_principle);
  gate.run(4, "monotone relabeling commutes, 20 maps per fixture",
           relabel_commutes);
  gate.run(5, "time-Lipschitz bound over 20-step tau grids", time_lipschitz);
  gate.run(6, "exhaustive strategy optimality, 25 scenarios + fixtures",
           strategy_optimality);
  gate.run(7, "first-order convergence on the analytic profile",
           convergence_order);
  gate.run(8, "mesh fixture: frontier strategy, separator, shrinkage",
           mesh_scenario_structure);
  gate.run(10, "byte-identical repeated CLI runs on all fixtures",
           determinism);
  // Runs last: audits every report the other criteria emitted.
  gate.run(9, "burnt + preserved == total on every emitted report",
           conservation);

  const int failures = gate.print();
  if (failures == 0) {
    std::printf("acceptance: all 10 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria failed\n", failures);
  return 1;
}
