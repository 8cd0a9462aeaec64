#include "netblaze/grid.hpp"

#include <algorithm>
#include <cmath>

namespace netblaze {

int Grid::node_at(int edge, int m) const {
  if (m == 0) return net_.edge(edge).tail;
  if (m == seg_count_[edge]) return net_.edge(edge).head;
  return interior_base_[edge] + m - 1;
}

int Grid::nearest_node(const Location& loc) const {
  if (loc.is_vertex()) {
    if (loc.vertex() < 0 || loc.vertex() >= num_vertices())
      fail(Errc::invalid_location, "vertex id out of range");
    return loc.vertex();
  }
  if (loc.edge() < 0 || loc.edge() >= net_.num_edges())
    fail(Errc::invalid_location, "edge id out of range");
  const Edge& e = net_.edge(loc.edge());
  const double s = loc.offset();
  if (!(s >= 0) || !(s <= e.length))
    fail(Errc::invalid_location, "offset outside [0, length]");
  const double k = s / step_[loc.edge()];
  const double lo = std::floor(k);
  int m = static_cast<int>(lo);
  if (k - lo > 0.5) ++m;  // exact half ties stay at the smaller m
  m = std::clamp(m, 0, seg_count_[loc.edge()]);
  return node_at(loc.edge(), m);
}

Grid discretize(const Network& net, double h_target) {
  if (!(h_target > 0)) fail(Errc::invalid_spec, "h_target must be > 0");

  Grid g(net);
  const int nv = net.num_vertices();
  const int ne = net.num_edges();
  g.seg_count_.resize(ne);
  g.step_.resize(ne);
  g.interior_base_.resize(ne);

  int next = nv;
  for (int j = 0; j < ne; ++j) {
    const double l = net.edge(j).length;
    const int m = std::max(1, static_cast<int>(std::ceil(l / h_target)));
    g.seg_count_[j] = m;
    g.step_[j] = l / m;
    g.interior_base_[j] = next;
    next += m - 1;
  }
  g.max_step_ = 0;
  for (double h : g.step_) g.max_step_ = std::max(g.max_step_, h);

  g.coord_.resize(next);
  for (int i = 0; i < nv; ++i) g.coord_[i] = net.vertex(i).pos;
  for (int j = 0; j < ne; ++j) {
    const Edge& e = net.edge(j);
    const Point a = net.vertex(e.tail).pos;
    const Point b = net.vertex(e.head).pos;
    for (int m = 1; m < g.seg_count_[j]; ++m) {
      const double t = (m * g.step_[j]) / e.length;
      g.coord_[g.interior_base_[j] + m - 1] = {a.x + t * (b.x - a.x),
                                               a.y + t * (b.y - a.y)};
    }
  }

  // Adjacency (CSR). Interior nodes link to their edge neighbors; vertex
  // nodes link into every incident edge.
  std::vector<int> degree(next, 0);
  for (int j = 0; j < ne; ++j) {
    const int m = g.seg_count_[j];
    degree[net.edge(j).tail] += 1;
    degree[net.edge(j).head] += 1;
    for (int i = 1; i < m; ++i) degree[g.interior_base_[j] + i - 1] += 2;
  }
  g.arc_offset_.assign(next + 1, 0);
  for (int n = 0; n < next; ++n) g.arc_offset_[n + 1] = g.arc_offset_[n] + degree[n];
  g.arc_.resize(g.arc_offset_[next]);
  std::vector<std::size_t> cursor(g.arc_offset_.begin(), g.arc_offset_.end() - 1);
  auto link = [&](int from, int to, int edge, double h) {
    g.arc_[cursor[from]++] = {to, edge, h};
  };
  // Vertex arcs first, in incidence (edge id) order, then interior chains.
  for (int i = 0; i < nv; ++i)
    for (const IncidentEdge& ie : net.incident(i)) {
      const int j = ie.edge;
      const int m = g.seg_count_[j];
      const int nb = ie.sign > 0 ? g.node_at(j, 1) : g.node_at(j, m - 1);
      link(i, nb, j, g.step_[j]);
    }
  for (int j = 0; j < ne; ++j) {
    const int m = g.seg_count_[j];
    for (int i = 1; i < m; ++i) {
      const int node = g.interior_base_[j] + i - 1;
      link(node, g.node_at(j, i - 1), j, g.step_[j]);
      link(node, g.node_at(j, i + 1), j, g.step_[j]);
    }
  }
  return g;
}

}  // namespace netblaze
