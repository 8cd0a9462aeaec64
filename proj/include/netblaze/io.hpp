#pragma once

#include <map>
#include <string>
#include <vector>

#include "netblaze/blocking.hpp"
#include "netblaze/hopflax.hpp"

namespace netblaze {

// ---- numbers ---------------------------------------------------------------
// Every float leaving the process goes through fmt17: %.17g, which
// round-trips doubles exactly and keeps all emitted artifacts byte-stable.
std::string fmt17(double v);

// ---- files -----------------------------------------------------------------
std::string read_text_file(const std::string& path);
/// Writes to a sibling temp file and renames it into place.
void write_text_atomic(const std::string& path, const std::string& content);

// ---- network ---------------------------------------------------------------
Network read_network_json(const std::string& text);
Network read_network_file(const std::string& path);
std::string network_json(const Network& net);

// ---- scenario --------------------------------------------------------------
struct SlownessSpec {
  enum class Kind { constant, norm, per_edge } kind = Kind::constant;
  double c0 = 1;
  std::map<int, double> table;
};

struct ScenarioFile {
  Scenario scenario;
  SlownessSpec slowness;
};

ScenarioFile read_scenario_json(const std::string& text, const Network& net);
ScenarioFile read_scenario_file(const std::string& path, const Network& net);
SlownessField make_slowness(const Grid& g, const SlownessSpec& spec);

// ---- cost weights ----------------------------------------------------------
CostWeights read_weights_json(const std::string& text, const Network& net);
CostWeights read_weights_file(const std::string& path, const Network& net);

// ---- CSV emitters ----------------------------------------------------------
// Rows are per (edge, m), m = 0..M_j, so vertex nodes appear once per
// incident edge; incident_edge_id names the edge whose one-sided value the
// row carries (equal to edge_id under this layout). Unreached prints "inf".
std::string grid_csv(const Grid& g);
std::string field_csv(const Grid& g, const NodeField& field);
std::string front_csv(const Grid& g, const NodeField& field, double t);
std::string evolve_csv(const Grid& g, const EvolvedSolution& sol, double t);

// ---- JSON emitters (fixed key order, fmt17 numbers) ------------------------
std::string report_json(const Network& net, const BlockReport& report);
std::string front_manifest_json(const std::vector<double>& times,
                                double total_length,
                                const std::vector<double>& burnt_lengths);
std::string evolve_manifest_json(const std::vector<double>& times,
                                 const EvolvedSolution& sol);
std::string verify_json(const OptimalityCheck& check,
                        const std::vector<int>& v_ad, const Strategy& sigma_opt);
std::string cost_json(const CostResult& result, const BlockReport& report);
std::string error_json(const std::string& code, const std::string& message);

}  // namespace netblaze
