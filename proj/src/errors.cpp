#include "netblaze/errors.hpp"

namespace netblaze {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_spec: return "InvalidSpec";
    case Errc::dangling_edge_endpoint: return "DanglingEdgeEndpoint";
    case Errc::non_positive_length: return "NonPositiveLength";
    case Errc::self_loop: return "SelfLoop";
    case Errc::disconnected_graph: return "DisconnectedGraph";
    case Errc::invalid_location: return "InvalidLocation";
    case Errc::non_positive_slowness: return "NonPositiveSlowness";
    case Errc::empty_source_set: return "EmptySourceSet";
    case Errc::blocked_source: return "BlockedSource";
    case Errc::non_convergence: return "NonConvergence";
    case Errc::grid_mismatch: return "GridMismatch";
    case Errc::inadmissible_strategy: return "InadmissibleStrategy";
    case Errc::too_many_admissible_vertices: return "TooManyAdmissibleVertices";
    case Errc::non_monotone_theta: return "NonMonotoneTheta";
    case Errc::schema_violation: return "SchemaViolation";
    case Errc::bad_config: return "BadConfig";
    case Errc::io_error: return "IoError";
  }
  return "UnknownError";
}

}  // namespace netblaze
