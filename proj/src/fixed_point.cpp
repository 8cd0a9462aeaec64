#include "netblaze/fixed_point.hpp"

#include <algorithm>
#include <string>

namespace netblaze {

// Jacobi value iteration on the grid Bellman equation. Double-buffered, so
// node updates within a sweep are order-free and the OpenMP path produces
// exactly the serial result. The sweep count reported excludes the final
// no-change sweep that detects convergence.
FixedPointResult fixed_point_distance(const Grid& g, const SlownessField& c,
                                      const SourceSet& src,
                                      std::span<const int> blocked,
                                      const FixedPointOptions& opt) {
  std::vector<char> mask = detail::blocked_mask(g, blocked);
  if (src.nodes.empty()) fail(Errc::empty_source_set, "no source nodes");
  for (int s : src.nodes) {
    if (s < 0 || s >= g.num_nodes())
      fail(Errc::invalid_spec, "source node id out of range");
    if (mask[s]) fail(Errc::blocked_source, "source on a blocked vertex");
  }

  const int n = g.num_nodes();
  const ArcCosts costs = arc_costs(g, c);
  std::vector<std::size_t> base(n + 1, 0);
  for (int node = 0; node < n; ++node)
    base[node + 1] = base[node] + g.arcs(node).size();

  std::vector<char> is_source(n, 0);
  for (int s : src.nodes) is_source[s] = 1;

  std::vector<double> u(n, kUnreached), next(n, kUnreached);
  for (int s : src.nodes) u[s] = next[s] = 0;

  const long long limit =
      opt.max_sweeps > 0 ? opt.max_sweeps
                         : static_cast<long long>(n) * static_cast<long long>(n);
  int sweeps = 0;
  for (long long iter = 0;; ++iter) {
    if (iter >= limit)
      fail(Errc::non_convergence,
           "value iteration did not settle within " + std::to_string(limit) +
               " sweeps");
    bool changed = false;
#pragma omp parallel for schedule(static) reduction(|| : changed) if (opt.parallel)
    for (int node = 0; node < n; ++node) {
      if (mask[node] || is_source[node]) continue;
      double best = u[node];
      const auto arcs = g.arcs(node);
      for (std::size_t k = 0; k < arcs.size(); ++k) {
        const int nb = arcs[k].to;
        if (mask[nb]) continue;
        const double via = u[nb];
        if (via == kUnreached) continue;
        const double cand = via + costs.into_owner[base[node] + k];
        if (cand < best) best = cand;
      }
      if (best != u[node]) changed = true;
      next[node] = best;
    }
    if (!changed) break;
    ++sweeps;
    std::swap(u, next);
  }

  FixedPointResult res;
  res.field.values = std::move(u);
  res.field.blocked = detail::blocked_vertex_values(g, c, blocked, res.field.values);
  res.sweeps = sweeps;
  return res;
}

}  // namespace netblaze
