#pragma once

#include <span>
#include <vector>

#include "netblaze/solve.hpp"

namespace netblaze {

/// Evolved front solution u(x, t) = min { u0(y) : S(y, x) <= t } where S is
/// the first-arrival metric of the grid. Per node this is a right-continuous
/// nonincreasing step function of t; a query at a jump time returns the
/// post-jump (lower) value.
///
/// Representation: the sorted distinct values alpha_0 < ... < alpha_K of u0
/// and, per level k, the multi-source arrival field from { u0 <= alpha_k }.
/// u(x, t) is the smallest alpha_k whose level reaches x within t.
class EvolvedSolution {
 public:
  EvolvedSolution(std::vector<double> levels,
                  std::vector<std::vector<double>> level_times);

  double value_at(int node, double t) const;

  int num_levels() const { return static_cast<int>(levels_.size()); }
  std::span<const double> levels() const { return levels_; }
  std::span<const double> level_times(int k) const { return times_[k]; }

 private:
  std::vector<double> levels_;
  std::vector<std::vector<double>> times_;  // [level][node]
};

/// Builds the evolved solution. u0 must be finite at every node. The
/// per-level solves are independent; `parallel` runs them under OpenMP with
/// output identical to the serial order.
EvolvedSolution evolve(const Grid& g, const SlownessField& c,
                       const std::vector<double>& u0, bool parallel = false);

/// Burnt set snapshot at time t of the fire started on `src`.
struct FrontSnapshot {
  double time;
  std::vector<char> burnt_node;  // value <= t
  double burnt_length;
};

/// Snapshot from a precomputed arrival field. Burnt length counts full
/// segments exactly (a fully burnt edge contributes its length l_j, not the
/// sum of its steps) and boundary segments by linear interpolation
/// h * (t - v1) / (v2 - v1).
FrontSnapshot front_from_field(const Grid& g, const NodeField& field, double t);

/// One multi-source solve thresholded at t.
FrontSnapshot front_at(const Grid& g, const SlownessField& c,
                       const SourceSet& src, double t);

/// Nondecreasing piecewise-linear relabeling map given by breakpoints
/// (x strictly increasing, y nondecreasing), extended flat outside the table.
/// Evaluation clamps each segment to [y_i, y_i+1] so it is monotone in
/// floating point as well. Throws non_monotone_theta on a bad table.
class MonotoneMap {
 public:
  MonotoneMap(std::vector<double> xs, std::vector<double> ys);
  double operator()(double s) const;

 private:
  std::vector<double> xs_, ys_;
};

/// Checks the relabeling invariance evolve(theta(u0)) == theta(evolve(u0))
/// exactly, at every node and every level time of either side.
bool relabel_check(const Grid& g, const SlownessField& c,
                   const std::vector<double>& u0, const MonotoneMap& theta,
                   bool parallel = false);

}  // namespace netblaze
