#pragma once

#include <string>
#include <vector>

#include "netblaze/grid.hpp"
#include "netblaze/node_field.hpp"

namespace netblaze {

/// What to draw. Output is byte-deterministic for identical inputs.
struct Scene {
  const Grid* grid = nullptr;
  const NodeField* field = nullptr;     // colors segments; null = neutral ink
  std::vector<int> source_nodes;        // circles
  std::vector<int> square_vertices;     // blocked / admissible highlights
  std::vector<char> edge_burnt;         // per edge: thick stroke when set
  bool classified = false;              // edge_burnt is meaningful
};

/// Renders the network drawing: viewport = vertex bounding box + 5% margin,
/// grid segments colored by node value on a monotone dark-blue-to-yellow
/// ramp (gray for unreached), rhombus vertex markers, squares and circles on
/// top.
std::string render_svg(const Scene& scene);

}  // namespace netblaze
