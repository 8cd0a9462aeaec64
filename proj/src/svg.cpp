#include "netblaze/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "netblaze/io.hpp"

namespace netblaze {

namespace {

// Five-anchor approximation of a perceptually monotone dark-to-bright ramp.
constexpr double kRamp[5][3] = {
    {0.267, 0.005, 0.329},
    {0.229, 0.322, 0.546},
    {0.128, 0.567, 0.551},
    {0.369, 0.789, 0.383},
    {0.993, 0.906, 0.144},
};

std::string ramp_color(double t) {
  t = std::clamp(t, 0.0, 1.0);
  const double pos = t * 4;
  const int i = std::min(3, static_cast<int>(pos));
  const double f = pos - i;
  char buf[8];
  unsigned rgb[3];
  for (int c = 0; c < 3; ++c) {
    const double v = kRamp[i][c] + f * (kRamp[i + 1][c] - kRamp[i][c]);
    rgb[c] = static_cast<unsigned>(std::lround(255 * std::clamp(v, 0.0, 1.0)));
  }
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", rgb[0], rgb[1], rgb[2]);
  return buf;
}

constexpr const char* kGray = "#9a9a9a";

double node_value(const Scene& s, int node, int edge) {
  if (!s.field) return kUnreached;
  if (s.grid->is_vertex_node(node)) {
    if (const BlockedVertexValue* bv = s.field->blocked_at(node)) {
      for (const EdgeValue& ev : bv->per_edge)
        if (ev.edge == edge) return ev.value;
      return kUnreached;
    }
  }
  return s.field->values[node];
}

}  // namespace

std::string render_svg(const Scene& scene) {
  const Grid& g = *scene.grid;
  const Network& net = g.network();

  double minx = net.vertex(0).pos.x, maxx = minx;
  double miny = net.vertex(0).pos.y, maxy = miny;
  for (int i = 1; i < net.num_vertices(); ++i) {
    const Point p = net.vertex(i).pos;
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  const double spanx = maxx - minx, spany = maxy - miny;
  const double margin = 0.05 * std::max({spanx, spany, 1e-9});
  const double w = spanx + 2 * margin, h = spany + 2 * margin;
  // Flip y so the drawing keeps the mathematical orientation.
  auto X = [&](double x) { return x; };
  auto Y = [&](double y) { return maxy + miny - y; };

  double vmax = 0;
  if (scene.field) {
    for (double v : scene.field->values)
      if (v != kUnreached) vmax = std::max(vmax, v);
    for (const BlockedVertexValue& bv : scene.field->blocked)
      for (const EdgeValue& ev : bv.per_edge)
        if (ev.value != kUnreached) vmax = std::max(vmax, ev.value);
  }

  const double diag = std::sqrt(w * w + h * h);
  const double thin = 0.006 * diag;
  const double thick = 0.016 * diag;
  const double marker = 0.012 * diag;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"" +
         fmt17(std::round(800 * h / w)) + "\" viewBox=\"" + fmt17(minx - margin) +
         " " + fmt17(Y(maxy) - margin) + " " + fmt17(w) + " " + fmt17(h) +
         "\">\n";
  out += "<rect x=\"" + fmt17(minx - margin) + "\" y=\"" +
         fmt17(Y(maxy) - margin) + "\" width=\"" + fmt17(w) + "\" height=\"" +
         fmt17(h) + "\" fill=\"#ffffff\"/>\n";

  for (int j = 0; j < net.num_edges(); ++j) {
    const double width = scene.classified && j < static_cast<int>(scene.edge_burnt.size()) &&
                                 scene.edge_burnt[j]
                             ? thick
                             : thin;
    for (int m = 0; m < g.segments(j); ++m) {
      const int a = g.node_at(j, m), b = g.node_at(j, m + 1);
      const Point pa = g.coord(a), pb = g.coord(b);
      std::string color = kGray;
      if (scene.field) {
        const double va = node_value(scene, a, j), vb = node_value(scene, b, j);
        if (va == kUnreached && vb == kUnreached) {
          color = kGray;
        } else {
          const double v = va == kUnreached ? vb : vb == kUnreached ? va
                                                                    : 0.5 * (va + vb);
          color = ramp_color(vmax > 0 ? v / vmax : 0.0);
        }
      } else {
        color = "#404040";
      }
      out += "<line x1=\"" + fmt17(X(pa.x)) + "\" y1=\"" + fmt17(Y(pa.y)) +
             "\" x2=\"" + fmt17(X(pb.x)) + "\" y2=\"" + fmt17(Y(pb.y)) +
             "\" stroke=\"" + color + "\" stroke-width=\"" + fmt17(width) +
             "\" stroke-linecap=\"round\"/>\n";
    }
  }

  // Vertex rhombi.
  for (int i = 0; i < net.num_vertices(); ++i) {
    const Point p = net.vertex(i).pos;
    const double r = marker;
    out += "<path d=\"M " + fmt17(X(p.x)) + " " + fmt17(Y(p.y) - r) + " L " +
           fmt17(X(p.x) + r) + " " + fmt17(Y(p.y)) + " L " + fmt17(X(p.x)) +
           " " + fmt17(Y(p.y) + r) + " L " + fmt17(X(p.x) - r) + " " +
           fmt17(Y(p.y)) + " Z\" fill=\"#ffffff\" stroke=\"#303030\" "
           "stroke-width=\"" +
           fmt17(0.35 * thin) + "\"/>\n";
  }
  // Highlighted vertices (blocked strategy / admissible set): squares.
  for (int v : scene.square_vertices) {
    const Point p = net.vertex(v).pos;
    const double r = 1.25 * marker;
    out += "<rect x=\"" + fmt17(X(p.x) - r) + "\" y=\"" + fmt17(Y(p.y) - r) +
           "\" width=\"" + fmt17(2 * r) + "\" height=\"" + fmt17(2 * r) +
           "\" fill=\"#d4581f\" stroke=\"#5a230a\" stroke-width=\"" +
           fmt17(0.5 * thin) + "\"/>\n";
  }
  // Fire sources: circles.
  for (int n : scene.source_nodes) {
    const Point p = g.coord(n);
    out += "<circle cx=\"" + fmt17(X(p.x)) + "\" cy=\"" + fmt17(Y(p.y)) +
           "\" r=\"" + fmt17(1.1 * marker) +
           "\" fill=\"#b01818\" stroke=\"#400000\" stroke-width=\"" +
           fmt17(0.5 * thin) + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace netblaze
