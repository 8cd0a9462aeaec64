#pragma once

#include <stdexcept>
#include <string>

namespace netblaze {

/// Stable machine-readable failure codes. CLI maps them to exit codes and
/// error JSON; tests match on them.
enum class Errc {
  invalid_spec,
  dangling_edge_endpoint,
  non_positive_length,
  self_loop,
  disconnected_graph,
  invalid_location,
  non_positive_slowness,
  empty_source_set,
  blocked_source,
  non_convergence,
  grid_mismatch,
  inadmissible_strategy,
  too_many_admissible_vertices,
  non_monotone_theta,
  schema_violation,
  bad_config,
  io_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace netblaze
