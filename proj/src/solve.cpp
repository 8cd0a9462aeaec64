#include "netblaze/solve.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace netblaze {

SourceSet make_source_set(const Grid& g, std::span<const Location> locations) {
  SourceSet src;
  src.nodes.reserve(locations.size());
  for (const Location& loc : locations) src.nodes.push_back(g.nearest_node(loc));
  std::sort(src.nodes.begin(), src.nodes.end());
  src.nodes.erase(std::unique(src.nodes.begin(), src.nodes.end()),
                  src.nodes.end());
  return src;
}

ArcCosts arc_costs(const Grid& g, const SlownessField& c) {
  ArcCosts costs;
  const int n = g.num_nodes();
  costs.into_neighbor.resize(g.num_arcs());
  costs.into_owner.resize(g.num_arcs());
  std::size_t k = 0;
  for (int node = 0; node < n; ++node)
    for (const GridArc& a : g.arcs(node)) {
      costs.into_neighbor[k] = a.step * c.at(a.to, a.edge);
      costs.into_owner[k] = a.step * c.at(node, a.edge);
      ++k;
    }
  return costs;
}

namespace detail {

std::vector<char> blocked_mask(const Grid& g, std::span<const int> blocked) {
  std::vector<char> mask(g.num_nodes(), 0);
  for (int v : blocked) {
    if (v < 0 || v >= g.num_vertices())
      fail(Errc::invalid_spec, "blocked vertex id out of range");
    mask[v] = 1;
  }
  return mask;
}

std::vector<BlockedVertexValue> blocked_vertex_values(
    const Grid& g, const SlownessField& c, std::span<const int> blocked,
    const std::vector<double>& values) {
  std::vector<BlockedVertexValue> out;
  out.reserve(blocked.size());
  std::vector<char> mask = blocked_mask(g, blocked);
  for (int v : blocked) {
    BlockedVertexValue bv;
    bv.vertex = v;
    for (const IncidentEdge& ie : g.network().incident(v)) {
      const int j = ie.edge;
      const int m = g.segments(j);
      const int nb = ie.sign > 0 ? g.node_at(j, 1) : g.node_at(j, m - 1);
      const double base = mask[nb] ? kUnreached : values[nb];
      const double val =
          base == kUnreached ? kUnreached : base + g.step(j) * c.at(v, j);
      bv.per_edge.push_back({j, val});
    }
    out.push_back(std::move(bv));
  }
  std::sort(out.begin(), out.end(),
            [](const BlockedVertexValue& a, const BlockedVertexValue& b) {
              return a.vertex < b.vertex;
            });
  return out;
}

}  // namespace detail

namespace {

// Monotone label-setting over the weighted grid graph. Equal keys pop in
// ascending node order, so runs are reproducible bit for bit.
std::vector<double> label_setting(const Grid& g,
                                  const std::vector<double>& into_neighbor,
                                  const SourceSet& src,
                                  const std::vector<char>& blocked) {
  std::vector<double> dist(g.num_nodes(), kUnreached);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (int s : src.nodes) {
    dist[s] = 0;
    heap.emplace(0.0, s);
  }
  // Arc index base per node mirrors arc_costs' layout.
  std::vector<std::size_t> base(g.num_nodes() + 1, 0);
  for (int n = 0; n < g.num_nodes(); ++n)
    base[n + 1] = base[n] + g.arcs(n).size();

  while (!heap.empty()) {
    auto [d, n] = heap.top();
    heap.pop();
    if (d > dist[n]) continue;
    const auto arcs = g.arcs(n);
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      const GridArc& a = arcs[k];
      if (blocked[a.to]) continue;
      const double nd = d + into_neighbor[base[n] + k];
      if (nd < dist[a.to]) {
        dist[a.to] = nd;
        heap.emplace(nd, a.to);
      }
    }
  }
  return dist;
}

void check_sources(const Grid& g, const SourceSet& src,
                   const std::vector<char>& blocked) {
  if (src.nodes.empty()) fail(Errc::empty_source_set, "no source nodes");
  for (int s : src.nodes) {
    if (s < 0 || s >= g.num_nodes())
      fail(Errc::invalid_spec, "source node id out of range");
    if (blocked[s])
      fail(Errc::blocked_source,
           "source node " + std::to_string(s) + " is a blocked vertex");
  }
}

}  // namespace

NodeField solve_distance(const Grid& g, const SlownessField& c,
                         const SourceSet& src) {
  std::vector<char> blocked(g.num_nodes(), 0);
  check_sources(g, src, blocked);
  NodeField f;
  f.values = label_setting(g, arc_costs(g, c).into_neighbor, src, blocked);
  return f;
}

NodeField solve_operator_field(const Grid& g, int x0, double delta) {
  if (x0 < 0 || x0 >= g.num_vertices())
    fail(Errc::invalid_location, "operation center must be a vertex id");
  if (!(delta >= 0)) fail(Errc::invalid_spec, "delta must be >= 0");
  NodeField f;
  if (delta == 0) {
    f.values.assign(g.num_nodes(), 0.0);
    return f;
  }
  SourceSet src;
  src.nodes = {x0};
  return solve_distance(g, SlownessField::constant(g, delta), src);
}

NodeField solve_blocked_distance(const Grid& g, const SlownessField& c,
                                 const SourceSet& src,
                                 std::span<const int> blocked) {
  std::vector<char> mask = detail::blocked_mask(g, blocked);
  check_sources(g, src, mask);
  NodeField f;
  f.values = label_setting(g, arc_costs(g, c).into_neighbor, src, mask);
  f.blocked = detail::blocked_vertex_values(g, c, blocked, f.values);
  return f;
}

}  // namespace netblaze
