#pragma once

#include <span>

#include "netblaze/solve.hpp"

namespace netblaze {

struct FixedPointOptions {
  bool parallel = false;  // OpenMP Jacobi sweeps (bit-identical to serial)
  int max_sweeps = 0;     // 0: |nodes|^2 guard
};

struct FixedPointResult {
  NodeField field;
  int sweeps;  // sweeps that changed at least one value
};

/// Value-iteration solution of the same update equation the label-setting
/// solver uses, via damped-free Jacobi sweeps from u = +inf, u = 0 on the
/// sources. Converges to the identical fixed point bit-for-bit (floating-
/// point addition is monotone and all arc costs are positive), which makes
/// it the independent cross-check for solve_distance / solve_blocked_distance.
/// Throws non_convergence if the sweep guard is exhausted.
FixedPointResult fixed_point_distance(const Grid& g, const SlownessField& c,
                                      const SourceSet& src,
                                      std::span<const int> blocked = {},
                                      const FixedPointOptions& opt = {});

}  // namespace netblaze
