// Scenario runner for the dissipative-dielectric radiation laboratory.
// One subcommand per scenario, plus `validate` (config check only) and
// `schema` (prints the accepted config schema). Exit codes: 0 success,
// 2 non-converged numerics, 1 error.

#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "qrad/config.hpp"
#include "qrad/errors.hpp"
#include "qrad/runner.hpp"

namespace {

struct CommonArgs {
  std::string config_path;
  std::string out_dir = "out";
  unsigned threads = 1;
  bool lax = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "JSON run configuration")
      ->required();
  cmd->add_option("--out", args.out_dir, "output directory");
  cmd->add_option("--threads", args.threads, "worker threads for fan-out");
  cmd->add_flag("--lax", args.lax, "warn on unknown config keys instead of rejecting");
  // all computations are deterministic; the flag documents the absence of RNG
  cmd->add_flag("--seedless", "no-op: runs use no random numbers");
  cmd->add_flag("--strict", "reject unknown config keys (default)");
}

int run_one(qrad::Scenario scenario, const CommonArgs& args) {
  std::vector<std::string> warnings;
  qrad::RunConfig cfg = qrad::parse_config(args.config_path, !args.lax,
                                           args.lax ? &warnings : nullptr);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  if (cfg.scenario != scenario) {
    throw qrad::Error(qrad::ErrorCode::SchemaViolation,
                      std::string("/scenario: config requests '") +
                          qrad::scenario_name(cfg.scenario) +
                          "' but the subcommand is '" +
                          qrad::scenario_name(scenario) + "'");
  }
  const qrad::RunReport report =
      qrad::run_scenario(cfg, args.out_dir, args.threads);
  if (report.status == qrad::RunStatus::error) {
    std::cerr << "error: " << report.message << "\n";
  } else {
    std::cout << report.to_json() << "\n";
  }
  return static_cast<int>(report.status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum radiation in a dispersive, dissipative dielectric"};
  app.require_subcommand(1);

  const qrad::Scenario scenarios[] = {
      qrad::Scenario::dispersion,        qrad::Scenario::bands,
      qrad::Scenario::spectrum,          qrad::Scenario::yield_sweep,
      qrad::Scenario::exact_vs_perturbative,
      qrad::Scenario::correlation_map,   qrad::Scenario::sudden_switch,
      qrad::Scenario::oracle_compare,
  };
  const char* descriptions[] = {
      "complex permittivity and wavenumber tables",
      "polariton band structure",
      "first-order created-particle spectrum n_pm(k)",
      "lower-band yield sweep against the closed form",
      "exact mode solver cross-checked against first order",
      "photon-partner correlation map <Phi A>",
      "kappa-cutoff scan for a step switch-off",
      "lattice oracle vs memory-eliminated ODE",
  };

  CommonArgs args[std::size(scenarios)];
  for (std::size_t i = 0; i < std::size(scenarios); ++i) {
    CLI::App* cmd =
        app.add_subcommand(qrad::scenario_name(scenarios[i]), descriptions[i]);
    add_common(cmd, args[i]);
  }

  CommonArgs validate_args;
  CLI::App* validate = app.add_subcommand("validate", "check a config and exit");
  add_common(validate, validate_args);

  CLI::App* schema = app.add_subcommand("schema", "print the config schema");

  CLI11_PARSE(app, argc, argv);

  try {
    if (schema->parsed()) {
      std::cout << qrad::config_schema_json() << "\n";
      return 0;
    }
    if (validate->parsed()) {
      std::vector<std::string> warnings;
      qrad::parse_config(validate_args.config_path, !validate_args.lax,
                         validate_args.lax ? &warnings : nullptr);
      for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
      std::cout << "ok\n";
      return 0;
    }
    for (std::size_t i = 0; i < std::size(scenarios); ++i) {
      if (app.get_subcommands().front()->get_name() ==
          qrad::scenario_name(scenarios[i])) {
        return run_one(scenarios[i], args[i]);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
