#pragma once

#include <span>
#include <vector>

#include "netblaze/errors.hpp"

namespace netblaze {

struct Point {
  double x = 0;
  double y = 0;
};

struct Vertex {
  int id = -1;
  Point pos;
};

/// Undirected arc between two distinct vertices. The arc is a straight
/// segment in the plane; `length` defaults to the Euclidean distance between
/// the endpoints but may be overridden (the embedding is then only used for
/// drawing and coordinate-dependent slowness).
struct Edge {
  int id = -1;
  int tail = -1;
  int head = -1;
  double length = 0;
};

struct IncidentEdge {
  int edge;
  int sign;  // +1 when the vertex is the tail, -1 when it is the head
};

/// Validated metric network: dense vertex/edge ids, positive lengths,
/// no self-loops, connected. Parallel edges are allowed.
class Network {
 public:
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const Vertex& vertex(int i) const { return vertices_[i]; }
  const Edge& edge(int j) const { return edges_[j]; }
  std::span<const Vertex> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }

  /// Incident edges of a vertex, ascending by edge id.
  std::span<const IncidentEdge> incident(int vertex) const {
    return {incidence_.data() + inc_offset_[vertex],
            inc_offset_[vertex + 1] - inc_offset_[vertex]};
  }

  double total_length() const { return total_length_; }

  friend Network build_network(std::vector<Vertex> vertices,
                               std::vector<Edge> edges);

 private:
  Network() = default;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<IncidentEdge> incidence_;
  std::vector<std::size_t> inc_offset_;
  double total_length_ = 0;
};

/// Validates and assembles a network. Edges with length <= 0 set get the
/// Euclidean endpoint distance. Throws Error with code
/// dangling_edge_endpoint, non_positive_length, self_loop,
/// disconnected_graph, or invalid_spec (id problems).
Network build_network(std::vector<Vertex> vertices, std::vector<Edge> edges);

/// A point of the network: either a vertex or an arclength offset s in
/// [0, length] along an edge. Offsets at 0 / length canonicalize to the
/// endpoint vertex so shared endpoints compare equal.
class Location {
 public:
  static Location at_vertex(int v);
  static Location on_edge(int edge, double s);

  bool is_vertex() const { return vertex_ >= 0; }
  int vertex() const { return vertex_; }
  int edge() const { return edge_; }
  double offset() const { return s_; }

 private:
  int vertex_ = -1;
  int edge_ = -1;
  double s_ = 0;
};

/// Length of the shortest path between two locations. Throws
/// invalid_location for out-of-range ids or offsets.
double path_distance(const Network& net, const Location& a, const Location& b);

}  // namespace netblaze
