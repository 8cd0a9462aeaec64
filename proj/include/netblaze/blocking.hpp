#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "netblaze/solve.hpp"

namespace netblaze {

/// A blocking problem instance: fire sources, the operation-center vertex
/// the blocking operator starts from, and the operator slowness delta
/// (time per unit length; speed 1/delta).
struct Scenario {
  std::vector<Location> r0;
  int x0 = -1;
  double delta = 1;
};

/// Set of vertices the operator blocks, sorted unique vertex ids.
struct Strategy {
  std::vector<int> vertices;
};

/// Per-vertex / per-edge costs of the damage functional
/// I(sigma) = sum alpha_i over blocked vertices + sum beta_j over burnt edges.
struct CostWeights {
  std::vector<double> alpha;  // size |V|
  std::vector<double> beta;   // size |E|
};

struct BlockReport {
  Strategy sigma;
  std::vector<int> burnt_edges;      // ascending edge ids
  std::vector<int> preserved_edges;  // complement, ascending
  double burnt_length;
  double preserved_length;  // total - burnt, so conservation is exact
  NodeField field;          // blocked arrival field
  std::vector<int> admissible;  // admissible vertices of the scenario
  bool override_used;           // true when an inadmissible sigma was forced
};

/// Vertices the operator can reach strictly before the fire:
/// w(x_i) < u(x_i). Both fields must live on the same grid (grid_mismatch).
std::vector<int> admissible_vertices(const Grid& g, const NodeField& u,
                                     const NodeField& w);

/// The frontier of the admissible set: admissible vertices sharing an edge
/// with a non-admissible vertex. Blocking it cuts every path from the fire
/// into the admissible region.
Strategy optimal_strategy(const Network& net, std::span<const int> v_ad);

/// Solves the scenario under a strategy and classifies every edge as burnt
/// or preserved. sigma must consist of admissible vertices unless
/// allow_inadmissible is set (then the report carries override_used = true).
BlockReport block_report(const Grid& g, const SlownessField& c,
                         const Scenario& scenario, const Strategy& sigma,
                         bool allow_inadmissible = false);

struct OptimalityCheck {
  bool ok;
  Strategy witness;  // a strategy preserving an edge sigma_opt loses, if any
  std::uint64_t strategies_checked;
};

/// Exhaustively verifies that every admissible strategy preserves a subset
/// of what the frontier strategy preserves. Guarded by |V_ad| <= 20
/// (too_many_admissible_vertices). Enumeration order (and thus the witness)
/// is by ascending subset mask over the sorted admissible vertices.
OptimalityCheck verify_optimality(const Grid& g, const SlownessField& c,
                                  const Scenario& scenario,
                                  bool parallel = false);

struct CostResult {
  Strategy sigma;
  double cost;
};

/// Minimizes I(sigma) over all subsets of the admissible vertices.
/// Ties break toward fewer blocked vertices, then lexicographically smaller
/// id lists. Same |V_ad| <= 20 guard.
CostResult cost_optimal_strategy(const Grid& g, const SlownessField& c,
                                 const Scenario& scenario,
                                 const CostWeights& weights,
                                 bool parallel = false);

namespace detail {
/// Burnt-edge classification: an edge burns iff an interior grid node has a
/// finite value or an unblocked endpoint vertex does (the latter matters
/// only for edges without interior nodes). A blocked vertex's per-edge value
/// never marks any other incident edge burnt.
std::vector<char> burnt_edges_mask(const Grid& g, const NodeField& field,
                                   std::span<const int> blocked);
}  // namespace detail

}  // namespace netblaze
