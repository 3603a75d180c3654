#ifndef QRAD_CONFIG_HPP
#define QRAD_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include "qrad/lattice.hpp"
#include "qrad/medium.hpp"
#include "qrad/profile.hpp"

namespace qrad {

enum class Scenario {
  dispersion,
  bands,
  spectrum,
  yield_sweep,
  exact_vs_perturbative,
  correlation_map,
  sudden_switch,
  oracle_compare,
};

const char* scenario_name(Scenario s);
std::optional<Scenario> scenario_from_name(const std::string& name);

/// Numerical knobs; every scenario reads the subset it needs and leaves
/// the rest at the defaults baked in here.
struct NumericsConfig {
  double rel_tol = 1e-10;
  double ode_tol = 1e-10;
  double kappa_cutoff = 0.0;  // 0 -> profile default (40 / t_char)

  // frequency / wavenumber grids
  double omega_max = 0.0;  // dispersion; 0 -> 4 n Omega
  std::size_t omega_points = 2001;
  double k_min = 0.0;
  double k_max = 0.0;  // bands: 0 -> 50 Omega; spectrum: 0 -> 6 n / tau
  std::size_t k_points = 201;

  // single-mode scenarios
  double k = 0.0;
  Band band = Band::lower;

  // sudden-switch cutoff grid (geometric)
  double lambda_min = 0.0;  // 0 -> 4 max(w_b(k), 1/ tau-like scale)
  double lambda_max = 0.0;  // 0 -> 100 lambda_min
  std::size_t lambda_points = 9;
  double contrast_tau = 0.0;  // >0 adds a Lorentzian contrast scan

  // exact solver kappa grid
  double kappa_min = 0.0;  // 0 -> 1e-3 / tau
  std::size_t kappa_panels = 48;
  std::size_t gl_order = 8;

  // yield sweep
  std::vector<double> G0_values;
  std::vector<double> tau_values;
  bool linearize_lower_band = true;
  double k_cutoff = 0.0;

  // correlation map
  double time = 0.0;
  std::vector<double> times;  // ridge-speed observations (optional)
  double dx_max = 0.0;        // 0 -> 1.5 t / n
  double y_max = 0.0;         // 0 -> 1.5 t
  std::size_t n_dx = 0;       // 0 -> from 8 cells per tau
  std::size_t n_y = 0;
  double map_k_max = 0.0;
  double map_kappa_max = 0.0;

  // lattice oracle
  LatticeConfig lattice;
  double t_start = 0.0;
  double t_end = 0.0;
  std::size_t refinements = 2;  // convergence ladder dy, dy/2, dy/4
};

struct OutputConfig {
  std::vector<std::string> formats = {"csv", "json"};
};

struct RunConfig {
  Scenario scenario = Scenario::dispersion;
  MediumParams medium;
  double G0 = 0.0;  // static coupling (dispersion, sudden-switch)
  std::optional<SwitchingProfile> profile;
  NumericsConfig numerics;
  OutputConfig output;
  std::string echo;  // canonical JSON echo of the parsed config
};

/// Parses and validates a JSON config file. In strict mode unknown keys
/// raise SchemaViolation (with a JSON-pointer path); otherwise they are
/// collected into `warnings`. Scenario-specific required fields are
/// enforced here, not at run time.
RunConfig parse_config(const std::string& path, bool strict = true,
                       std::vector<std::string>* warnings = nullptr);

/// Same, from an in-memory JSON text (used by tests and the validator).
RunConfig parse_config_text(const std::string& text, bool strict = true,
                            std::vector<std::string>* warnings = nullptr);

/// The documented config schema as a JSON document.
std::string config_schema_json();

}  // namespace qrad

#endif  // QRAD_CONFIG_HPP
