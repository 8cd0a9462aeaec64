#include "netblaze/network.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

namespace netblaze {

namespace {

double euclid(const Point& a, const Point& b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  return std::sqrt(dx * dx + dy * dy);
}

}  // namespace

Network build_network(std::vector<Vertex> vertices, std::vector<Edge> edges) {
  if (vertices.empty()) fail(Errc::invalid_spec, "network has no vertices");
  const int nv = static_cast<int>(vertices.size());
  const int ne = static_cast<int>(edges.size());

  std::vector<char> seen_v(nv, 0);
  for (const Vertex& v : vertices) {
    if (v.id < 0 || v.id >= nv)
      fail(Errc::invalid_spec,
           "vertex ids must be dense 0..|V|-1, got " + std::to_string(v.id));
    if (seen_v[v.id]) fail(Errc::invalid_spec, "duplicate vertex id");
    seen_v[v.id] = 1;
  }
  std::sort(vertices.begin(), vertices.end(),
            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });

  std::vector<char> seen_e(ne, 0);
  for (Edge& e : edges) {
    if (e.id < 0 || e.id >= ne)
      fail(Errc::invalid_spec,
           "edge ids must be dense 0..|E|-1, got " + std::to_string(e.id));
    if (seen_e[e.id]) fail(Errc::invalid_spec, "duplicate edge id");
    seen_e[e.id] = 1;
    if (e.tail < 0 || e.tail >= nv || e.head < 0 || e.head >= nv)
      fail(Errc::dangling_edge_endpoint,
           "edge " + std::to_string(e.id) + " references a missing vertex");
    if (e.tail == e.head)
      fail(Errc::self_loop, "edge " + std::to_string(e.id) + " is a self-loop");
    if (e.length < 0 || std::isnan(e.length))
      fail(Errc::non_positive_length,
           "edge " + std::to_string(e.id) + " has negative length");
    if (e.length == 0) {
      e.length = euclid(vertices[e.tail].pos, vertices[e.head].pos);
      if (!(e.length > 0))
        fail(Errc::non_positive_length,
             "edge " + std::to_string(e.id) + " has zero endpoint distance");
    }
    if (!std::isfinite(e.length) || e.length <= 0)
      fail(Errc::non_positive_length,
           "edge " + std::to_string(e.id) + " has non-positive length");
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });

  // BFS connectivity over vertices.
  std::vector<std::vector<int>> adj(nv);
  for (const Edge& e : edges) {
    adj[e.tail].push_back(e.head);
    adj[e.head].push_back(e.tail);
  }
  std::vector<char> reached(nv, 0);
  std::queue<int> bfs;
  bfs.push(0);
  reached[0] = 1;
  int count = 1;
  while (!bfs.empty()) {
    const int v = bfs.front();
    bfs.pop();
    for (int w : adj[v])
      if (!reached[w]) {
        reached[w] = 1;
        ++count;
        bfs.push(w);
      }
  }
  if (count != nv) fail(Errc::disconnected_graph, "network is not connected");

  Network net;
  net.vertices_ = std::move(vertices);
  net.edges_ = std::move(edges);
  net.inc_offset_.assign(nv + 1, 0);
  for (const Edge& e : net.edges_) {
    ++net.inc_offset_[e.tail + 1];
    ++net.inc_offset_[e.head + 1];
  }
  for (int i = 0; i < nv; ++i) net.inc_offset_[i + 1] += net.inc_offset_[i];
  net.incidence_.resize(net.inc_offset_[nv]);
  std::vector<std::size_t> cursor(net.inc_offset_.begin(),
                                  net.inc_offset_.end() - 1);
  for (const Edge& e : net.edges_) {  // edge order => ascending ids per vertex
    net.incidence_[cursor[e.tail]++] = {e.id, +1};
    net.incidence_[cursor[e.head]++] = {e.id, -1};
  }
  double total = 0;
  for (const Edge& e : net.edges_) total += e.length;
  net.total_length_ = total;
  return net;
}

Location Location::at_vertex(int v) {
  Location loc;
  loc.vertex_ = v;
  return loc;
}

Location Location::on_edge(int edge, double s) {
  Location loc;
  loc.edge_ = edge;
  loc.s_ = s;
  return loc;
}

namespace {

// Canonical form: endpoint offsets become vertex locations.
Location canonical(const Network& net, const Location& loc) {
  if (loc.is_vertex()) {
    if (loc.vertex() < 0 || loc.vertex() >= net.num_vertices())
      fail(Errc::invalid_location, "vertex id out of range");
    return loc;
  }
  if (loc.edge() < 0 || loc.edge() >= net.num_edges())
    fail(Errc::invalid_location, "edge id out of range");
  const Edge& e = net.edge(loc.edge());
  const double s = loc.offset();
  if (!(s >= 0) || !(s <= e.length))
    fail(Errc::invalid_location, "offset outside [0, length]");
  if (s == 0) return Location::at_vertex(e.tail);
  if (s == e.length) return Location::at_vertex(e.head);
  return loc;
}

}  // namespace

double path_distance(const Network& net, const Location& a_in,
                     const Location& b_in) {
  const Location a = canonical(net, a_in);
  const Location b = canonical(net, b_in);

  if (a.is_vertex() && b.is_vertex() && a.vertex() == b.vertex()) return 0;
  if (!a.is_vertex() && !b.is_vertex() && a.edge() == b.edge() &&
      a.offset() == b.offset())
    return 0;

  // Dijkstra over vertices, seeded with the projections of a.
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(net.num_vertices(), inf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  auto seed = [&](int v, double d) {
    if (d < dist[v]) {
      dist[v] = d;
      heap.emplace(d, v);
    }
  };
  if (a.is_vertex()) {
    seed(a.vertex(), 0);
  } else {
    const Edge& e = net.edge(a.edge());
    seed(e.tail, a.offset());
    seed(e.head, e.length - a.offset());
  }
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (d > dist[v]) continue;
    for (const IncidentEdge& ie : net.incident(v)) {
      const Edge& e = net.edge(ie.edge);
      const int w = ie.sign > 0 ? e.head : e.tail;
      const double nd = d + e.length;
      if (nd < dist[w]) {
        dist[w] = nd;
        heap.emplace(nd, w);
      }
    }
  }

  if (b.is_vertex()) return dist[b.vertex()];
  const Edge& e = net.edge(b.edge());
  double best = std::min(dist[e.tail] + b.offset(),
                         dist[e.head] + (e.length - b.offset()));
  if (!a.is_vertex() && a.edge() == b.edge())
    best = std::min(best, std::abs(a.offset() - b.offset()));
  return best;
}

}  // namespace netblaze
