#ifndef QRAD_RUNNER_HPP
#define QRAD_RUNNER_HPP

#include <map>
#include <string>
#include <vector>

#include "qrad/config.hpp"

namespace qrad {

enum class RunStatus { ok = 0, error = 1, not_converged = 2 };

struct RunReport {
  RunStatus status = RunStatus::ok;
  std::string scenario;
  std::map<std::string, double> headline;
  std::map<std::string, bool> convergence;
  std::vector<std::string> artifacts;  // files written, relative to out_dir
  std::string config_echo;
  std::string message;  // diagnostics when status == error
  double wall_time_ms = 0.0;

  std::string to_json() const;
};

/// Dispatches the configured scenario, writes its data files plus
/// report.json into out_dir (created if missing), and returns the report.
/// Exceptions are caught and folded into status = error.
RunReport run_scenario(const RunConfig& cfg, const std::string& out_dir,
                       unsigned threads = 1);

}  // namespace qrad

#endif  // QRAD_RUNNER_HPP
