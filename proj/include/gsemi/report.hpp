#ifndef GSEMI_REPORT_HPP
#define GSEMI_REPORT_HPP

#include <string>

#include <json.hpp>

namespace gsemi {

// Everything a run needs; echoed verbatim into the report so every output
// is self-describing. radius <= 0 means "auto": max(omega(G), 6).
struct ExperimentConfig {
  std::string command;       // moment | walks | norm | bijection-verify |
                             // khintchine-verify | fock | bounds | extremal-sweep
  std::string graph_source;  // constructor spec or file:path
  int p_max = 3;
  int radius = 0;
  double tol = 1e-10;
  unsigned seed = 1;
  int trials = 100;
  int L = 0;      // extremal-sweep only
  int omega = 0;  // extremal-sweep only
  std::string output_path;
  std::string format = "json";  // json | csv
};

struct RunReport {
  nlohmann::json report;  // schema/version/config/results/falsifications/timings
  std::string csv;        // main table, RFC 4180
  int falsification_count = 0;
};

// Dispatches on config.command, checks every inequality it reports, and
// writes the output file atomically when output_path is set. Identical
// configs produce byte-identical reports outside the "timings" object.
RunReport run(const ExperimentConfig& config);

nlohmann::json config_to_json(const ExperimentConfig& config);

}  // namespace gsemi

#endif
