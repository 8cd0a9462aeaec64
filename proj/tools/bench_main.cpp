// Benchmark of the OpenMP-parallel kernels against their serial reference
// implementations.  Each row reports wall time for both variants plus a
// bitwise comparison of the results, since the parallel paths are required
// to reproduce the serial ones exactly.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "netblaze/blocking.hpp"
#include "netblaze/fixed_point.hpp"
#include "netblaze/hopflax.hpp"
#include "netblaze/solve.hpp"

#ifdef _OPENMP
#include <omp.h>
static double now() { return omp_get_wtime(); }
#else
#include <chrono>
static double now() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}
#endif

using namespace netblaze;

namespace {

Network lattice(int k) {
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  // Offset from the origin so norm-based slowness fields stay positive.
  for (int y = 0; y < k; ++y)
    for (int x = 0; x < k; ++x)
      vs.push_back({y * k + x, {double(x + 1), double(y + 1)}});
  int e = 0;
  for (int y = 0; y < k; ++y)
    for (int x = 0; x < k; ++x) {
      if (x + 1 < k) es.push_back({e++, y * k + x, y * k + x + 1, 0});
      if (y + 1 < k) es.push_back({e++, y * k + x, (y + 1) * k + x, 0});
    }
  return build_network(std::move(vs), std::move(es));
}

void row(const char* name, double serial, double parallel, bool match) {
  std::printf("%-22s %10.4fs %10.4fs %7.2fx   %s\n", name, serial, parallel,
              serial / parallel, match ? "results match" : "MISMATCH");
}

bool same(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace

int main() {
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("netblaze benchmark (%d thread%s)\n\n", threads,
              threads == 1 ? "" : "s");
  std::printf("%-22s %11s %11s %8s\n", "kernel", "serial", "parallel",
              "speedup");

  // Fixed-point value iteration on a finely discretized lattice.
  {
    const Network net = lattice(12);
    const Grid grid = discretize(net, 1.0 / 64);
    const SlownessField c = SlownessField::euclidean_norm(grid);
    SourceSet src;
    src.nodes = {0};

    double t0 = now();
    const FixedPointResult serial =
        fixed_point_distance(grid, c, src, {}, {false, 0});
    double t1 = now();
    const FixedPointResult parallel =
        fixed_point_distance(grid, c, src, {}, {true, 0});
    double t2 = now();
    row("fixed-point sweeps", t1 - t0, t2 - t1,
        same(serial.field.values, parallel.field.values));

    double t3 = now();
    const NodeField dij = solve_distance(grid, c, src);
    double t4 = now();
    std::printf("%-22s %10.4fs %22s %s\n", "  label-setting ref", t4 - t3, "",
                same(dij.values, serial.field.values) ? "results match"
                                                      : "MISMATCH");
  }

  // Evolutive solution: one multi-source solve per datum level.
  {
    const Network net = lattice(12);
    const Grid grid = discretize(net, 1.0 / 32);
    const SlownessField c = SlownessField::constant(grid, 1.0);
    SourceSet src;
    src.nodes = {0};
    const NodeField base = solve_distance(grid, c, src);
    std::vector<double> u0(base.values.size());
    for (std::size_t i = 0; i < u0.size(); ++i)
      u0[i] = std::floor(base.values[i]);  // quantize into ~24 levels

    double t0 = now();
    const EvolvedSolution serial = evolve(grid, c, u0, false);
    double t1 = now();
    const EvolvedSolution parallel = evolve(grid, c, u0, true);
    double t2 = now();
    bool match = serial.num_levels() == parallel.num_levels();
    for (int k = 0; match && k < serial.num_levels(); ++k) {
      const auto a = serial.level_times(k);
      const auto b = parallel.level_times(k);
      match = std::equal(a.begin(), a.end(), b.begin(), b.end());
    }
    row("evolve levels", t1 - t0, t2 - t1, match);
  }

  // Exhaustive strategy enumeration on a coarse lattice.
  {
    const Network net = lattice(5);
    const Grid grid = discretize(net, 0.5);
    const SlownessField c = SlownessField::constant(grid, 1.0);
    Scenario sc;
    sc.r0 = {Location::at_vertex(0)};
    sc.x0 = net.num_vertices() - 1;
    const SourceSet src = make_source_set(grid, sc.r0);
    const NodeField u = solve_distance(grid, c, src);
    sc.delta = 2.0;
    for (int i = 0; i < 64; ++i) {
      const NodeField w = solve_operator_field(grid, sc.x0, sc.delta);
      const std::size_t n = admissible_vertices(grid, u, w).size();
      if (n >= 10 && n <= 16) break;
      sc.delta *= n > 16 ? 1.15 : 0.85;
    }

    double t0 = now();
    const OptimalityCheck serial = verify_optimality(grid, c, sc, false);
    double t1 = now();
    const OptimalityCheck parallel = verify_optimality(grid, c, sc, true);
    double t2 = now();
    char label[64];
    std::snprintf(label, sizeof label, "enumerate 2^%d",
                  int(std::round(std::log2(double(serial.strategies_checked)))));
    row(label, t1 - t0, t2 - t1,
        serial.ok == parallel.ok &&
            serial.witness.vertices == parallel.witness.vertices);

    std::vector<double> alpha(net.num_vertices(), 1.0);
    std::vector<double> beta(net.num_edges(), 1.0);
    double t3 = now();
    const CostResult cs =
        cost_optimal_strategy(grid, c, sc, {alpha, beta}, false);
    double t4 = now();
    const CostResult cp =
        cost_optimal_strategy(grid, c, sc, {alpha, beta}, true);
    double t5 = now();
    row("cost minimization", t4 - t3, t5 - t4,
        cs.sigma.vertices == cp.sigma.vertices && cs.cost == cp.cost);
  }

  return 0;
}
