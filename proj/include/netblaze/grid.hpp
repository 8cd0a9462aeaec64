#pragma once

#include <span>
#include <vector>

#include "netblaze/network.hpp"

namespace netblaze {

/// Directed step between two adjacent grid nodes. `edge` is the network edge
/// the step runs along and `step` its grid spacing h_j.
struct GridArc {
  int to;
  int edge;
  double step;
};

/// Uniform per-edge discretization of a network. Every edge j is split into
/// M_j = ceil(l_j / h_target) segments of exact length h_j = l_j / M_j.
/// Node ids: vertex i <-> node i for i < |V|; interior nodes follow in edge
/// order. Vertex nodes are shared by all incident edges.
class Grid {
 public:
  const Network& network() const { return net_; }
  int num_nodes() const { return static_cast<int>(coord_.size()); }
  int num_vertices() const { return net_.num_vertices(); }

  int segments(int edge) const { return seg_count_[edge]; }
  double step(int edge) const { return step_[edge]; }
  double max_step() const { return max_step_; }

  /// Node at parameter m on edge j, m in [0, M_j]; endpoints resolve to the
  /// shared vertex nodes.
  int node_at(int edge, int m) const;

  bool is_vertex_node(int node) const { return node < num_vertices(); }
  Point coord(int node) const { return coord_[node]; }

  std::span<const GridArc> arcs(int node) const {
    return {arc_.data() + arc_offset_[node],
            arc_offset_[node + 1] - arc_offset_[node]};
  }
  std::size_t num_arcs() const { return arc_.size(); }

  /// Nearest grid node to a location; ties between two neighboring grid
  /// nodes break toward the smaller m. Snapping displacement is <= h_j / 2.
  int nearest_node(const Location& loc) const;

  friend Grid discretize(const Network& net, double h_target);

 private:
  explicit Grid(Network net) : net_(std::move(net)) {}
  Network net_;
  std::vector<int> seg_count_;
  std::vector<int> interior_base_;
  std::vector<double> step_;
  std::vector<Point> coord_;
  std::vector<std::size_t> arc_offset_;
  std::vector<GridArc> arc_;
  double max_step_ = 0;
};

/// Builds the grid for a target spacing h_target > 0.
Grid discretize(const Network& net, double h_target);

}  // namespace netblaze
