#include "netblaze/hopflax.hpp"

#include <algorithm>
#include <cmath>

namespace netblaze {

EvolvedSolution::EvolvedSolution(std::vector<double> levels,
                                 std::vector<std::vector<double>> level_times)
    : levels_(std::move(levels)), times_(std::move(level_times)) {}

double EvolvedSolution::value_at(int node, double t) const {
  // times_[k][node] is nonincreasing in k (level source sets are nested);
  // the answer is the first level already arrived at time t.
  int lo = 0, hi = num_levels() - 1;
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    if (times_[mid][node] <= t)
      hi = mid;
    else
      lo = mid + 1;
  }
  return levels_[lo];
}

EvolvedSolution evolve(const Grid& g, const SlownessField& c,
                       const std::vector<double>& u0, bool parallel) {
  if (static_cast<int>(u0.size()) != g.num_nodes())
    fail(Errc::grid_mismatch, "initial datum size != node count");
  for (double v : u0)
    if (!std::isfinite(v))
      fail(Errc::invalid_spec, "initial datum must be finite");

  std::vector<double> levels = u0;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  const int k = static_cast<int>(levels.size());

  std::vector<std::vector<double>> times(k);

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < k; ++i) {
    SourceSet src;
    for (int n = 0; n < g.num_nodes(); ++n)
      if (u0[n] <= levels[i]) src.nodes.push_back(n);
    times[i] = solve_distance(g, c, src).values;
  }
  // The top level contains every node, so value_at is total on t >= 0.
  return EvolvedSolution(std::move(levels), std::move(times));
}

FrontSnapshot front_from_field(const Grid& g, const NodeField& field,
                               double t) {
  FrontSnapshot snap;
  snap.time = t;
  snap.burnt_node.resize(g.num_nodes());
  for (int n = 0; n < g.num_nodes(); ++n)
    snap.burnt_node[n] = field.values[n] <= t ? 1 : 0;

  double total = 0;
  const Network& net = g.network();
  for (int j = 0; j < net.num_edges(); ++j) {
    const int m = g.segments(j);
    const double h = g.step(j);
    int full = 0;
    double partial = 0;
    for (int i = 0; i < m; ++i) {
      const double v1 = field.values[g.node_at(j, i)];
      const double v2 = field.values[g.node_at(j, i + 1)];
      const double lo = std::min(v1, v2);
      const double hi = std::max(v1, v2);
      if (hi <= t) {
        ++full;
      } else if (lo <= t && hi > t) {
        partial += hi == kUnreached ? 0 : h * (t - lo) / (hi - lo);
      }
    }
    if (full == m)
      total += net.edge(j).length;  // exact saturation
    else
      total += full * h + partial;
  }
  snap.burnt_length = total;
  return snap;
}

FrontSnapshot front_at(const Grid& g, const SlownessField& c,
                       const SourceSet& src, double t) {
  return front_from_field(g, solve_distance(g, c, src), t);
}

MonotoneMap::MonotoneMap(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  if (xs_.empty() || xs_.size() != ys_.size())
    fail(Errc::non_monotone_theta, "breakpoint table must be nonempty, same size");
  for (std::size_t i = 0; i < xs_.size(); ++i)
    if (!std::isfinite(xs_[i]) || !std::isfinite(ys_[i]))
      fail(Errc::non_monotone_theta, "breakpoints must be finite");
  for (std::size_t i = 1; i < xs_.size(); ++i) {
    if (!(xs_[i] > xs_[i - 1]))
      fail(Errc::non_monotone_theta, "abscissae must increase strictly");
    if (ys_[i] < ys_[i - 1])
      fail(Errc::non_monotone_theta, "ordinates must be nondecreasing");
  }
}

double MonotoneMap::operator()(double s) const {
  if (s <= xs_.front()) return ys_.front();
  if (s >= xs_.back()) return ys_.back();
  // Segment i with xs[i] <= s < xs[i+1].
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), s);
  const std::size_t i = static_cast<std::size_t>(it - xs_.begin()) - 1;
  const double slope = (ys_[i + 1] - ys_[i]) / (xs_[i + 1] - xs_[i]);
  double v = ys_[i] + (s - xs_[i]) * slope;
  // Clamp keeps the evaluation monotone across breakpoints under rounding.
  return std::clamp(v, ys_[i], ys_[i + 1]);
}

bool relabel_check(const Grid& g, const SlownessField& c,
                   const std::vector<double>& u0, const MonotoneMap& theta,
                   bool parallel) {
  std::vector<double> relabeled(u0.size());
  for (std::size_t i = 0; i < u0.size(); ++i) relabeled[i] = theta(u0[i]);

  const EvolvedSolution a = evolve(g, c, relabeled, parallel);
  const EvolvedSolution b = evolve(g, c, u0, parallel);

  for (int n = 0; n < g.num_nodes(); ++n) {
    auto probe = [&](double t) {
      return a.value_at(n, t) == theta(b.value_at(n, t));
    };
    if (!probe(0)) return false;
    for (int k = 0; k < a.num_levels(); ++k)
      if (!probe(a.level_times(k)[n])) return false;
    for (int k = 0; k < b.num_levels(); ++k)
      if (!probe(b.level_times(k)[n])) return false;
  }
  return true;
}

}  // namespace netblaze
