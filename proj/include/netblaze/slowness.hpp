#pragma once

#include <map>
#include <vector>

#include "netblaze/grid.hpp"

namespace netblaze {

/// Propagation slowness c(x) (time per unit length) evaluated on the grid
/// nodes. The eikonal solvers weight a grid step into node y along edge j by
/// h_j * c(y); for the per-edge kind, c at a shared vertex depends on the
/// edge the step runs along, which is why `at` takes both.
///
/// Construction validates c > 0 (and finite) everywhere and records the
/// range [min, max] used by the metric-equivalence bounds.
class SlownessField {
 public:
  enum class Kind { constant, euclidean_norm, per_edge, sampled };

  static SlownessField constant(const Grid& g, double c0);
  /// c(x) = |x|, the Euclidean norm of the node's embedded coordinates.
  static SlownessField euclidean_norm(const Grid& g);
  /// One constant per edge id; the table must cover every edge.
  static SlownessField per_edge(const Grid& g,
                                const std::map<int, double>& table);
  /// Arbitrary per-node samples (size = number of grid nodes).
  static SlownessField sampled(const Grid& g, std::vector<double> values);

  Kind kind() const { return kind_; }
  double at(int node, int edge) const {
    switch (kind_) {
      case Kind::constant:
        return c0_;
      case Kind::per_edge:
        return edge_vals_[edge];
      default:
        return node_vals_[node];
    }
  }
  double min() const { return min_; }
  double max() const { return max_; }

 private:
  SlownessField() = default;
  Kind kind_ = Kind::constant;
  double c0_ = 1;
  std::vector<double> node_vals_;
  std::vector<double> edge_vals_;
  double min_ = 0;
  double max_ = 0;
};

}  // namespace netblaze
