#include "netblaze/blocking.hpp"

#include <algorithm>
#include <string>

namespace netblaze {

namespace detail {

std::vector<char> burnt_edges_mask(const Grid& g, const NodeField& field,
                                   std::span<const int> blocked) {
  std::vector<char> vertex_blocked(g.num_vertices(), 0);
  for (int v : blocked) vertex_blocked[v] = 1;

  const Network& net = g.network();
  std::vector<char> burnt(net.num_edges(), 0);
  for (int j = 0; j < net.num_edges(); ++j) {
    const int m = g.segments(j);
    bool hit = false;
    for (int i = 1; i < m && !hit; ++i)
      hit = field.values[g.node_at(j, i)] != kUnreached;
    if (!hit) {
      const Edge& e = net.edge(j);
      hit = (!vertex_blocked[e.tail] && field.values[e.tail] != kUnreached) ||
            (!vertex_blocked[e.head] && field.values[e.head] != kUnreached);
    }
    burnt[j] = hit ? 1 : 0;
  }
  return burnt;
}

}  // namespace detail

std::vector<int> admissible_vertices(const Grid& g, const NodeField& u,
                                     const NodeField& w) {
  const std::size_t n = static_cast<std::size_t>(g.num_nodes());
  if (u.values.size() != n || w.values.size() != n)
    fail(Errc::grid_mismatch, "fields live on different grids");
  std::vector<int> v_ad;
  for (int i = 0; i < g.num_vertices(); ++i)
    if (w.values[i] < u.values[i]) v_ad.push_back(i);
  return v_ad;
}

Strategy optimal_strategy(const Network& net, std::span<const int> v_ad) {
  std::vector<char> adm(net.num_vertices(), 0);
  for (int v : v_ad) adm[v] = 1;
  Strategy sigma;
  for (int v : v_ad)
    for (const IncidentEdge& ie : net.incident(v)) {
      const Edge& e = net.edge(ie.edge);
      const int other = ie.sign > 0 ? e.head : e.tail;
      if (!adm[other]) {
        sigma.vertices.push_back(v);
        break;
      }
    }
  std::sort(sigma.vertices.begin(), sigma.vertices.end());
  return sigma;
}

namespace {

struct ScenarioFields {
  SourceSet src;
  NodeField u, w;
  std::vector<int> v_ad;
};

ScenarioFields scenario_fields(const Grid& g, const SlownessField& c,
                               const Scenario& scenario) {
  ScenarioFields f;
  f.src = make_source_set(g, scenario.r0);
  f.u = solve_distance(g, c, f.src);
  f.w = solve_operator_field(g, scenario.x0, scenario.delta);
  f.v_ad = admissible_vertices(g, f.u, f.w);
  return f;
}

bool subset_of(std::span<const int> small, std::span<const int> big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

BlockReport block_report(const Grid& g, const SlownessField& c,
                         const Scenario& scenario, const Strategy& sigma,
                         bool allow_inadmissible) {
  ScenarioFields f = scenario_fields(g, c, scenario);
  const bool admissible = subset_of(sigma.vertices, f.v_ad);
  if (!admissible && !allow_inadmissible)
    fail(Errc::inadmissible_strategy,
         "strategy blocks vertices the operator cannot reach in time");

  BlockReport report;
  report.sigma = sigma;
  report.field = solve_blocked_distance(g, c, f.src, sigma.vertices);
  report.admissible = std::move(f.v_ad);
  report.override_used = !admissible;

  const std::vector<char> burnt =
      detail::burnt_edges_mask(g, report.field, sigma.vertices);
  const Network& net = g.network();
  double burnt_length = 0;
  for (int j = 0; j < net.num_edges(); ++j) {
    if (burnt[j]) {
      report.burnt_edges.push_back(j);
      burnt_length += net.edge(j).length;
    } else {
      report.preserved_edges.push_back(j);
    }
  }
  report.burnt_length = burnt_length;
  report.preserved_length = net.total_length() - burnt_length;
  return report;
}

namespace {

struct EnumerationContext {
  const Grid* g;
  const SlownessField* c;
  const SourceSet* src;
  std::vector<int> v_ad;
};

std::vector<int> mask_to_sigma(const EnumerationContext& ctx,
                               std::uint32_t mask) {
  std::vector<int> sigma;
  for (std::size_t b = 0; b < ctx.v_ad.size(); ++b)
    if (mask & (1u << b)) sigma.push_back(ctx.v_ad[b]);
  return sigma;  // v_ad sorted => sigma sorted
}

std::vector<char> burnt_of_sigma(const EnumerationContext& ctx,
                                 std::span<const int> sigma) {
  const NodeField field =
      solve_blocked_distance(*ctx.g, *ctx.c, *ctx.src, sigma);
  return detail::burnt_edges_mask(*ctx.g, field, sigma);
}

EnumerationContext make_context(const Grid& g, const SlownessField& c,
                                ScenarioFields& fields) {
  if (fields.v_ad.size() > 20)
    fail(Errc::too_many_admissible_vertices,
         std::to_string(fields.v_ad.size()) +
             " admissible vertices; exhaustive search is capped at 20");
  return {&g, &c, &fields.src, fields.v_ad};
}

}  // namespace

OptimalityCheck verify_optimality(const Grid& g, const SlownessField& c,
                                  const Scenario& scenario, bool parallel) {
  ScenarioFields fields = scenario_fields(g, c, scenario);
  EnumerationContext ctx = make_context(g, c, fields);

  const Strategy sigma_opt = optimal_strategy(g.network(), ctx.v_ad);
  const std::vector<char> burnt_opt = burnt_of_sigma(ctx, sigma_opt.vertices);
  const int ne = g.network().num_edges();

  const std::uint64_t count = 1ull << ctx.v_ad.size();
  std::uint64_t first_bad = count;  // sentinel: none

#pragma omp parallel for schedule(dynamic, 16) reduction(min : first_bad) \
    if (parallel)
  for (std::int64_t mask = 0; mask < static_cast<std::int64_t>(count); ++mask) {
    const std::vector<int> sigma =
        mask_to_sigma(ctx, static_cast<std::uint32_t>(mask));
    const std::vector<char> burnt = burnt_of_sigma(ctx, sigma);
    // sigma_opt must burn no edge that sigma manages to preserve.
    for (int j = 0; j < ne; ++j)
      if (burnt_opt[j] && !burnt[j]) {
        first_bad = std::min(first_bad, static_cast<std::uint64_t>(mask));
        break;
      }
  }

  OptimalityCheck res;
  res.strategies_checked = count;
  res.ok = first_bad == count;
  if (!res.ok)
    res.witness.vertices =
        mask_to_sigma(ctx, static_cast<std::uint32_t>(first_bad));
  return res;
}

CostResult cost_optimal_strategy(const Grid& g, const SlownessField& c,
                                 const Scenario& scenario,
                                 const CostWeights& weights, bool parallel) {
  const Network& net = g.network();
  if (static_cast<int>(weights.alpha.size()) != net.num_vertices() ||
      static_cast<int>(weights.beta.size()) != net.num_edges())
    fail(Errc::grid_mismatch, "cost weight sizes must match |V| and |E|");

  ScenarioFields fields = scenario_fields(g, c, scenario);
  EnumerationContext ctx = make_context(g, c, fields);
  const int ne = net.num_edges();
  const std::uint64_t count = 1ull << ctx.v_ad.size();

  struct Best {
    double cost;
    int size;
    std::vector<int> sigma;
    bool operator<(const Best& o) const {
      if (cost != o.cost) return cost < o.cost;
      if (size != o.size) return size < o.size;
      return sigma < o.sigma;
    }
  };
  Best best{kUnreached, 0, {}};

#pragma omp parallel if (parallel)
  {
    Best local{kUnreached, 0, {}};
#pragma omp for schedule(dynamic, 16) nowait
    for (std::int64_t mask = 0; mask < static_cast<std::int64_t>(count);
         ++mask) {
      const std::vector<int> sigma =
          mask_to_sigma(ctx, static_cast<std::uint32_t>(mask));
      const std::vector<char> burnt = burnt_of_sigma(ctx, sigma);
      double cost = 0;
      for (int v : sigma) cost += weights.alpha[v];
      for (int j = 0; j < ne; ++j)
        if (burnt[j]) cost += weights.beta[j];
      Best cand{cost, static_cast<int>(sigma.size()), sigma};
      if (cand < local) local = std::move(cand);
    }
#pragma omp critical
    if (local < best) best = std::move(local);
  }

  CostResult res;
  res.sigma.vertices = std::move(best.sigma);
  res.cost = best.cost;
  return res;
}

}  // namespace netblaze
