#include "netblaze/io.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace netblaze {

using nlohmann::json;

std::string fmt17(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io_error, "cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(Errc::io_error, "cannot write " + tmp);
    out << content;
    if (!out.flush()) fail(Errc::io_error, "short write to " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) fail(Errc::io_error, "rename to " + path + ": " + ec.message());
}

namespace {

json parse(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false, /*ignore_comments=*/true);
  if (j.is_discarded()) fail(Errc::schema_violation, what + ": invalid JSON");
  return j;
}

double number_at(const json& j, const std::string& path) {
  if (!j.is_number()) fail(Errc::schema_violation, path + ": expected a number");
  return j.get<double>();
}

int int_at(const json& j, const std::string& path) {
  if (!j.is_number_integer())
    fail(Errc::schema_violation, path + ": expected an integer");
  return j.get<int>();
}

const json& field_at(const json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) fail(Errc::schema_violation, path + "." + key + ": missing");
  return *it;
}

}  // namespace

Network read_network_json(const std::string& text) {
  const json root = parse(text, "network");
  if (!root.is_object()) fail(Errc::schema_violation, "network: expected object");

  std::vector<Vertex> vertices;
  const json& jv = field_at(root, "vertices", "$");
  if (!jv.is_array()) fail(Errc::schema_violation, "$.vertices: expected array");
  for (std::size_t i = 0; i < jv.size(); ++i) {
    const std::string p = "$.vertices[" + std::to_string(i) + "]";
    const json& v = jv[i];
    if (!v.is_object()) fail(Errc::schema_violation, p + ": expected object");
    Vertex vx;
    vx.id = int_at(field_at(v, "id", p), p + ".id");
    vx.pos.x = number_at(field_at(v, "x", p), p + ".x");
    vx.pos.y = number_at(field_at(v, "y", p), p + ".y");
    vertices.push_back(vx);
  }

  std::vector<Edge> edges;
  const json& je = field_at(root, "edges", "$");
  if (!je.is_array()) fail(Errc::schema_violation, "$.edges: expected array");
  for (std::size_t i = 0; i < je.size(); ++i) {
    const std::string p = "$.edges[" + std::to_string(i) + "]";
    const json& e = je[i];
    if (!e.is_object()) fail(Errc::schema_violation, p + ": expected object");
    Edge ed;
    ed.id = int_at(field_at(e, "id", p), p + ".id");
    ed.tail = int_at(field_at(e, "tail", p), p + ".tail");
    ed.head = int_at(field_at(e, "head", p), p + ".head");
    if (e.contains("length")) ed.length = number_at(e["length"], p + ".length");
    edges.push_back(ed);
  }
  return build_network(std::move(vertices), std::move(edges));
}

Network read_network_file(const std::string& path) {
  return read_network_json(read_text_file(path));
}

std::string network_json(const Network& net) {
  std::string out = "{\n  \"vertices\": [\n";
  for (int i = 0; i < net.num_vertices(); ++i) {
    const Vertex& v = net.vertex(i);
    out += "    {\"id\": " + std::to_string(v.id) + ", \"x\": " + fmt17(v.pos.x) +
           ", \"y\": " + fmt17(v.pos.y) + "}";
    out += i + 1 < net.num_vertices() ? ",\n" : "\n";
  }
  out += "  ],\n  \"edges\": [\n";
  for (int j = 0; j < net.num_edges(); ++j) {
    const Edge& e = net.edge(j);
    out += "    {\"id\": " + std::to_string(e.id) +
           ", \"tail\": " + std::to_string(e.tail) +
           ", \"head\": " + std::to_string(e.head) +
           ", \"length\": " + fmt17(e.length) + "}";
    out += j + 1 < net.num_edges() ? ",\n" : "\n";
  }
  out += "  ]\n}\n";
  return out;
}

ScenarioFile read_scenario_json(const std::string& text, const Network& net) {
  const json root = parse(text, "scenario");
  if (!root.is_object()) fail(Errc::schema_violation, "scenario: expected object");

  ScenarioFile sf;
  const json& jr = field_at(root, "r0", "$");
  if (!jr.is_array() || jr.empty())
    fail(Errc::schema_violation, "$.r0: expected nonempty array");
  for (std::size_t i = 0; i < jr.size(); ++i) {
    const std::string p = "$.r0[" + std::to_string(i) + "]";
    const json& loc = jr[i];
    if (!loc.is_object()) fail(Errc::schema_violation, p + ": expected object");
    if (loc.contains("vertex")) {
      const int v = int_at(loc["vertex"], p + ".vertex");
      if (v < 0 || v >= net.num_vertices())
        fail(Errc::schema_violation, p + ".vertex: unknown vertex id");
      sf.scenario.r0.push_back(Location::at_vertex(v));
    } else if (loc.contains("edge")) {
      const int e = int_at(loc["edge"], p + ".edge");
      if (e < 0 || e >= net.num_edges())
        fail(Errc::schema_violation, p + ".edge: unknown edge id");
      const double s = number_at(field_at(loc, "s", p), p + ".s");
      if (!(s >= 0) || !(s <= net.edge(e).length))
        fail(Errc::schema_violation, p + ".s: outside [0, length]");
      sf.scenario.r0.push_back(Location::on_edge(e, s));
    } else {
      fail(Errc::schema_violation, p + ": need \"vertex\" or \"edge\"+\"s\"");
    }
  }

  sf.scenario.x0 = int_at(field_at(root, "x0", "$"), "$.x0");
  if (sf.scenario.x0 < 0 || sf.scenario.x0 >= net.num_vertices())
    fail(Errc::schema_violation, "$.x0: unknown vertex id");
  sf.scenario.delta = number_at(field_at(root, "delta", "$"), "$.delta");
  if (!(sf.scenario.delta >= 0) || !std::isfinite(sf.scenario.delta))
    fail(Errc::schema_violation, "$.delta: must be finite and >= 0");

  const json& js = field_at(root, "slowness", "$");
  if (!js.is_object())
    fail(Errc::schema_violation, "$.slowness: expected object");
  const json& jk = field_at(js, "kind", "$.slowness");
  if (!jk.is_string())
    fail(Errc::schema_violation, "$.slowness.kind: expected string");
  const std::string kind = jk.get<std::string>();
  if (kind == "constant") {
    sf.slowness.kind = SlownessSpec::Kind::constant;
    sf.slowness.c0 = number_at(field_at(js, "c", "$.slowness"), "$.slowness.c");
    if (!(sf.slowness.c0 > 0) || !std::isfinite(sf.slowness.c0))
      fail(Errc::non_positive_slowness, "$.slowness.c: must be > 0");
  } else if (kind == "norm") {
    sf.slowness.kind = SlownessSpec::Kind::norm;
  } else if (kind == "per_edge") {
    sf.slowness.kind = SlownessSpec::Kind::per_edge;
    const json& jt = field_at(js, "table", "$.slowness");
    if (!jt.is_object())
      fail(Errc::schema_violation, "$.slowness.table: expected object");
    for (auto it = jt.begin(); it != jt.end(); ++it) {
      int edge = -1;
      try {
        edge = std::stoi(it.key());
      } catch (...) {
        fail(Errc::schema_violation,
             "$.slowness.table: keys must be edge ids, got \"" + it.key() + "\"");
      }
      const double v = number_at(*it, "$.slowness.table." + it.key());
      if (!(v > 0) || !std::isfinite(v))
        fail(Errc::non_positive_slowness,
             "$.slowness.table." + it.key() + ": must be > 0");
      sf.slowness.table[edge] = v;
    }
  } else {
    fail(Errc::schema_violation,
         "$.slowness.kind: expected constant | norm | per_edge");
  }
  return sf;
}

ScenarioFile read_scenario_file(const std::string& path, const Network& net) {
  return read_scenario_json(read_text_file(path), net);
}

SlownessField make_slowness(const Grid& g, const SlownessSpec& spec) {
  switch (spec.kind) {
    case SlownessSpec::Kind::constant:
      return SlownessField::constant(g, spec.c0);
    case SlownessSpec::Kind::norm:
      return SlownessField::euclidean_norm(g);
    case SlownessSpec::Kind::per_edge:
      return SlownessField::per_edge(g, spec.table);
  }
  fail(Errc::schema_violation, "unknown slowness kind");
}

CostWeights read_weights_json(const std::string& text, const Network& net) {
  const json root = parse(text, "weights");
  if (!root.is_object()) fail(Errc::schema_violation, "weights: expected object");
  CostWeights w;
  auto read_list = [&](const char* key, std::size_t want) {
    const json& arr = field_at(root, key, "$");
    const std::string p = std::string("$.") + key;
    if (!arr.is_array() || arr.size() != want)
      fail(Errc::schema_violation,
           p + ": expected array of length " + std::to_string(want));
    std::vector<double> out(want);
    for (std::size_t i = 0; i < want; ++i) {
      out[i] = number_at(arr[i], p + "[" + std::to_string(i) + "]");
      if (out[i] < 0 || !std::isfinite(out[i]))
        fail(Errc::schema_violation,
             p + "[" + std::to_string(i) + "]: must be finite and >= 0");
    }
    return out;
  };
  w.alpha = read_list("alpha", net.num_vertices());
  w.beta = read_list("beta", net.num_edges());
  return w;
}

CostWeights read_weights_file(const std::string& path, const Network& net) {
  return read_weights_json(read_text_file(path), net);
}

namespace {

// Value shown for a node on a row of edge j: blocked vertices report the
// one-sided value of that incident edge.
double row_value(const NodeField& field, const Grid& g, int node, int edge) {
  if (g.is_vertex_node(node)) {
    if (const BlockedVertexValue* bv = field.blocked_at(node)) {
      for (const EdgeValue& ev : bv->per_edge)
        if (ev.edge == edge) return ev.value;
      return kUnreached;
    }
  }
  return field.values[node];
}

void csv_row_prefix(std::string& out, const Grid& g, int j, int m) {
  const int node = g.node_at(j, m);
  const Point p = g.coord(node);
  out += std::to_string(j);
  out += ',';
  out += std::to_string(m);
  out += ',';
  out += fmt17(m * g.step(j));
  out += ',';
  out += fmt17(p.x);
  out += ',';
  out += fmt17(p.y);
}

}  // namespace

std::string grid_csv(const Grid& g) {
  std::string out = "edge_id,m,s,x,y\n";
  for (int j = 0; j < g.network().num_edges(); ++j)
    for (int m = 0; m <= g.segments(j); ++m) {
      csv_row_prefix(out, g, j, m);
      out += '\n';
    }
  return out;
}

std::string field_csv(const Grid& g, const NodeField& field) {
  std::string out = "edge_id,m,s,x,y,incident_edge_id,value\n";
  for (int j = 0; j < g.network().num_edges(); ++j)
    for (int m = 0; m <= g.segments(j); ++m) {
      csv_row_prefix(out, g, j, m);
      out += ',';
      out += std::to_string(j);
      out += ',';
      out += fmt17(row_value(field, g, g.node_at(j, m), j));
      out += '\n';
    }
  return out;
}

std::string front_csv(const Grid& g, const NodeField& field, double t) {
  std::string out = "edge_id,m,s,x,y,value,burnt\n";
  for (int j = 0; j < g.network().num_edges(); ++j)
    for (int m = 0; m <= g.segments(j); ++m) {
      csv_row_prefix(out, g, j, m);
      const double v = field.values[g.node_at(j, m)];
      out += ',';
      out += fmt17(v);
      out += ',';
      out += v <= t ? '1' : '0';
      out += '\n';
    }
  return out;
}

std::string evolve_csv(const Grid& g, const EvolvedSolution& sol, double t) {
  std::string out = "edge_id,m,s,x,y,value\n";
  for (int j = 0; j < g.network().num_edges(); ++j)
    for (int m = 0; m <= g.segments(j); ++m) {
      csv_row_prefix(out, g, j, m);
      out += ',';
      out += fmt17(sol.value_at(g.node_at(j, m), t));
      out += '\n';
    }
  return out;
}

namespace {

std::string int_list(const std::vector<int>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(xs[i]);
  }
  return out + "]";
}

std::string num_list(const std::vector<double>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += fmt17(xs[i]);
  }
  return out + "]";
}

}  // namespace

std::string report_json(const Network&, const BlockReport& report) {
  std::string out = "{\n";
  out += "  \"sigma\": " + int_list(report.sigma.vertices) + ",\n";
  out += "  \"burnt_edges\": " + int_list(report.burnt_edges) + ",\n";
  out += "  \"preserved_edges\": " + int_list(report.preserved_edges) + ",\n";
  out += "  \"burnt_length\": " + fmt17(report.burnt_length) + ",\n";
  out += "  \"preserved_length\": " + fmt17(report.preserved_length) + ",\n";
  out += "  \"admissible_vertices\": " + int_list(report.admissible) + ",\n";
  out += std::string("  \"override\": ") +
         (report.override_used ? "true" : "false") + "\n";
  out += "}\n";
  return out;
}

std::string front_manifest_json(const std::vector<double>& times,
                                double total_length,
                                const std::vector<double>& burnt_lengths) {
  std::string out = "{\n";
  out += "  \"times\": " + num_list(times) + ",\n";
  out += "  \"total_length\": " + fmt17(total_length) + ",\n";
  out += "  \"burnt_length\": " + num_list(burnt_lengths) + "\n";
  out += "}\n";
  return out;
}

std::string evolve_manifest_json(const std::vector<double>& times,
                                 const EvolvedSolution& sol) {
  std::vector<double> levels(sol.levels().begin(), sol.levels().end());
  std::string out = "{\n";
  out += "  \"times\": " + num_list(times) + ",\n";
  out += "  \"levels\": " + num_list(levels) + "\n";
  out += "}\n";
  return out;
}

std::string verify_json(const OptimalityCheck& check,
                        const std::vector<int>& v_ad,
                        const Strategy& sigma_opt) {
  std::string out = "{\n";
  out += std::string("  \"ok\": ") + (check.ok ? "true" : "false") + ",\n";
  out += "  \"admissible_vertices\": " + int_list(v_ad) + ",\n";
  out += "  \"sigma_opt\": " + int_list(sigma_opt.vertices) + ",\n";
  out += "  \"strategies_checked\": " + std::to_string(check.strategies_checked);
  if (!check.ok)
    out += ",\n  \"witness_sigma\": " + int_list(check.witness.vertices);
  out += "\n}\n";
  return out;
}

std::string cost_json(const CostResult& result, const BlockReport& report) {
  std::string out = "{\n";
  out += "  \"sigma\": " + int_list(result.sigma.vertices) + ",\n";
  out += "  \"cost\": " + fmt17(result.cost) + ",\n";
  out += "  \"burnt_edges\": " + int_list(report.burnt_edges) + ",\n";
  out += "  \"preserved_edges\": " + int_list(report.preserved_edges) + ",\n";
  out += "  \"burnt_length\": " + fmt17(report.burnt_length) + ",\n";
  out += "  \"preserved_length\": " + fmt17(report.preserved_length) + "\n";
  out += "}\n";
  return out;
}

std::string error_json(const std::string& code, const std::string& message) {
  json j;  // nlohmann escapes the free-form message safely
  j["error"] = code;
  j["message"] = message;
  return j.dump() + "\n";
}

}  // namespace netblaze
