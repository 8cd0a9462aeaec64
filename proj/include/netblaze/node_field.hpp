#pragma once

#include <limits>
#include <vector>

namespace netblaze {

/// Sentinel for nodes a solve never reached.
inline constexpr double kUnreached = std::numeric_limits<double>::infinity();

struct EdgeValue {
  int edge;
  double value;
};

/// One-sided values of a blocked vertex: fire may reach the vertex along one
/// incident edge without passing through it, so each incident edge carries
/// its own arrival value.
struct BlockedVertexValue {
  int vertex;
  std::vector<EdgeValue> per_edge;  // ascending by edge id
};

/// Per-grid-node scalar field produced by the solvers. `values` uses
/// kUnreached both for unreachable nodes and as the through-value of blocked
/// vertices; the latter carry their per-edge values in `blocked`.
struct NodeField {
  std::vector<double> values;
  std::vector<BlockedVertexValue> blocked;  // ascending by vertex id

  double at(int node) const { return values[node]; }

  const BlockedVertexValue* blocked_at(int vertex) const {
    for (const auto& b : blocked)
      if (b.vertex == vertex) return &b;
    return nullptr;
  }
};

}  // namespace netblaze
