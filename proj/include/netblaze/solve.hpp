#pragma once

#include <span>
#include <vector>

#include "netblaze/grid.hpp"
#include "netblaze/node_field.hpp"
#include "netblaze/slowness.hpp"

namespace netblaze {

/// Grid nodes acting as zero-value sources, sorted unique.
struct SourceSet {
  std::vector<int> nodes;
};

/// Snaps locations to their nearest grid nodes and deduplicates.
SourceSet make_source_set(const Grid& g, std::span<const Location> locations);

/// Per-arc step costs shared by the label-setting solver and the fixed-point
/// solver so both perform bit-identical update arithmetic.
/// For the arc list of node n, entry k describes the step n -> m:
///   into_neighbor[k] = h * c(m, edge)   cost of stepping out of n into m
///   into_owner[k]    = h * c(n, edge)   cost of stepping from m into n
struct ArcCosts {
  std::vector<double> into_neighbor;
  std::vector<double> into_owner;
};

ArcCosts arc_costs(const Grid& g, const SlownessField& c);

/// First-arrival field from the sources: the unique solution of
///   u(y) = min over grid neighbors x of { u(x) + h_j * c(y) },  u = 0 on src,
/// where the min at a vertex node ranges over all incident edges.
/// Label-setting (monotone causal order, ties by ascending node index).
/// Throws empty_source_set.
NodeField solve_distance(const Grid& g, const SlownessField& c,
                         const SourceSet& src);

/// Arrival-time field of an operator moving at constant slowness delta from
/// vertex x0: delta * (grid distance from x0). delta = 0 gives the zero
/// field.
NodeField solve_operator_field(const Grid& g, int x0, double delta);

/// First-arrival field when the vertices in `blocked` (sorted unique vertex
/// ids) absorb the front: their nodes are removed from propagation, then each
/// receives one-sided per-edge values u_j(x_i) = u(neighbor on e_j) + h_j *
/// c(x_i). Sources on blocked vertices are rejected (blocked_source).
NodeField solve_blocked_distance(const Grid& g, const SlownessField& c,
                                 const SourceSet& src,
                                 std::span<const int> blocked);

namespace detail {
// Shared by the blocked solvers: fills per-edge values of blocked vertices
// from the propagation result. Defined in solve.cpp.
std::vector<BlockedVertexValue> blocked_vertex_values(
    const Grid& g, const SlownessField& c, std::span<const int> blocked,
    const std::vector<double>& values);
std::vector<char> blocked_mask(const Grid& g, std::span<const int> blocked);
}  // namespace detail

}  // namespace netblaze
