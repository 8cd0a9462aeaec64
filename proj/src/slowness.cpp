#include "netblaze/slowness.hpp"

#include <cmath>
#include <string>

namespace netblaze {

namespace {

void check_positive(double v, const std::string& where) {
  if (!std::isfinite(v) || v <= 0)
    fail(Errc::non_positive_slowness, "slowness must be finite and > 0 " + where);
}

}  // namespace

SlownessField SlownessField::constant(const Grid&, double c0) {
  check_positive(c0, "(constant)");
  SlownessField f;
  f.kind_ = Kind::constant;
  f.c0_ = c0;
  f.min_ = f.max_ = c0;
  return f;
}

SlownessField SlownessField::euclidean_norm(const Grid& g) {
  SlownessField f;
  f.kind_ = Kind::euclidean_norm;
  f.node_vals_.resize(g.num_nodes());
  for (int n = 0; n < g.num_nodes(); ++n) {
    const Point p = g.coord(n);
    const double v = std::sqrt(p.x * p.x + p.y * p.y);
    check_positive(v, "at node " + std::to_string(n));
    f.node_vals_[n] = v;
  }
  f.min_ = f.max_ = f.node_vals_[0];
  for (double v : f.node_vals_) {
    f.min_ = std::min(f.min_, v);
    f.max_ = std::max(f.max_, v);
  }
  return f;
}

SlownessField SlownessField::per_edge(const Grid& g,
                                      const std::map<int, double>& table) {
  const int ne = g.network().num_edges();
  SlownessField f;
  f.kind_ = Kind::per_edge;
  f.edge_vals_.resize(ne);
  for (int j = 0; j < ne; ++j) {
    auto it = table.find(j);
    if (it == table.end())
      fail(Errc::schema_violation,
           "per-edge slowness table misses edge " + std::to_string(j));
    check_positive(it->second, "for edge " + std::to_string(j));
    f.edge_vals_[j] = it->second;
  }
  for (auto& [j, v] : table)
    if (j < 0 || j >= ne)
      fail(Errc::schema_violation,
           "per-edge slowness table names unknown edge " + std::to_string(j));
  if (f.edge_vals_.empty()) {
    f.min_ = f.max_ = 1;
    return f;
  }
  f.min_ = f.max_ = f.edge_vals_[0];
  for (double v : f.edge_vals_) {
    f.min_ = std::min(f.min_, v);
    f.max_ = std::max(f.max_, v);
  }
  return f;
}

SlownessField SlownessField::sampled(const Grid& g, std::vector<double> values) {
  if (static_cast<int>(values.size()) != g.num_nodes())
    fail(Errc::grid_mismatch, "sampled slowness size != node count");
  SlownessField f;
  f.kind_ = Kind::sampled;
  for (int n = 0; n < g.num_nodes(); ++n)
    check_positive(values[n], "at node " + std::to_string(n));
  f.node_vals_ = std::move(values);
  f.min_ = f.max_ = f.node_vals_[0];
  for (double v : f.node_vals_) {
    f.min_ = std::min(f.min_, v);
    f.max_ = std::max(f.max_, v);
  }
  return f;
}

}  // namespace netblaze
