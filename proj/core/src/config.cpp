#include "qrad/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qrad/errors.hpp"

namespace qrad {

using nlohmann::json;

const char* scenario_name(Scenario s) {
  switch (s) {
    case Scenario::dispersion: return "dispersion";
    case Scenario::bands: return "bands";
    case Scenario::spectrum: return "spectrum";
    case Scenario::yield_sweep: return "yield-sweep";
    case Scenario::exact_vs_perturbative: return "exact-vs-perturbative";
    case Scenario::correlation_map: return "correlation-map";
    case Scenario::sudden_switch: return "sudden-switch";
    case Scenario::oracle_compare: return "oracle-compare";
  }
  return "unknown";
}

std::optional<Scenario> scenario_from_name(const std::string& name) {
  for (Scenario s :
       {Scenario::dispersion, Scenario::bands, Scenario::spectrum,
        Scenario::yield_sweep, Scenario::exact_vs_perturbative,
        Scenario::correlation_map, Scenario::sudden_switch,
        Scenario::oracle_compare}) {
    if (name == scenario_name(s)) return s;
  }
  return std::nullopt;
}

namespace {

[[noreturn]] void violation(const std::string& pointer,
                            const std::string& what) {
  throw Error(ErrorCode::SchemaViolation, pointer + ": " + what);
}

void check_keys(const json& obj, const std::string& pointer,
                const std::set<std::string>& allowed, bool strict,
                std::vector<std::string>* warnings) {
  for (const auto& [key, unused] : obj.items()) {
    if (!allowed.count(key)) {
      const std::string where = pointer + "/" + key;
      if (strict) violation(where, "unknown key");
      if (warnings) warnings->push_back("ignoring unknown key " + where);
    }
  }
}

double need_number(const json& obj, const std::string& pointer,
                   const std::string& key) {
  if (!obj.contains(key)) violation(pointer + "/" + key, "required field missing");
  if (!obj[key].is_number()) violation(pointer + "/" + key, "expected a number");
  return obj[key].get<double>();
}

double opt_number(const json& obj, const std::string& pointer,
                  const std::string& key, double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number()) violation(pointer + "/" + key, "expected a number");
  return obj[key].get<double>();
}

std::size_t opt_size(const json& obj, const std::string& pointer,
                     const std::string& key, std::size_t fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number_unsigned()) {
    violation(pointer + "/" + key, "expected a non-negative integer");
  }
  return obj[key].get<std::size_t>();
}

bool opt_bool(const json& obj, const std::string& pointer,
              const std::string& key, bool fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_boolean()) violation(pointer + "/" + key, "expected a boolean");
  return obj[key].get<bool>();
}

std::vector<double> opt_number_array(const json& obj, const std::string& pointer,
                                     const std::string& key) {
  std::vector<double> out;
  if (!obj.contains(key)) return out;
  if (!obj[key].is_array()) violation(pointer + "/" + key, "expected an array");
  for (const auto& e : obj[key]) {
    if (!e.is_number()) violation(pointer + "/" + key, "expected numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

SwitchingProfile parse_profile(const json& j, bool strict,
                               std::vector<std::string>* warnings) {
  if (!j.is_object()) violation("/profile", "expected an object");
  if (!j.contains("type") || !j["type"].is_string()) {
    violation("/profile/type", "required field missing");
  }
  const std::string type = j["type"].get<std::string>();
  SwitchingProfile profile;
  if (type == "lorentzian") {
    check_keys(j, "/profile", {"type", "G0", "tau"}, strict, warnings);
    profile = LorentzianProfile{need_number(j, "/profile", "G0"),
                                need_number(j, "/profile", "tau")};
  } else if (type == "gaussian") {
    check_keys(j, "/profile", {"type", "G0", "tau"}, strict, warnings);
    profile = GaussianProfile{need_number(j, "/profile", "G0"),
                              need_number(j, "/profile", "tau")};
  } else if (type == "step") {
    check_keys(j, "/profile", {"type", "G0"}, strict, warnings);
    profile = StepProfile{need_number(j, "/profile", "G0")};
  } else if (type == "window") {
    check_keys(j, "/profile", {"type", "G0", "t_on", "t_off", "ramp"}, strict,
               warnings);
    profile = WindowProfile{need_number(j, "/profile", "G0"),
                            need_number(j, "/profile", "t_on"),
                            need_number(j, "/profile", "t_off"),
                            opt_number(j, "/profile", "ramp", 0.0)};
  } else if (type == "sampled") {
    check_keys(j, "/profile", {"type", "path"}, strict, warnings);
    if (!j.contains("path") || !j["path"].is_string()) {
      violation("/profile/path", "required field missing");
    }
    profile = load_sampled_profile(j["path"].get<std::string>());
  } else {
    violation("/profile/type", "unknown profile type '" + type + "'");
  }
  try {
    validate_profile(profile);
  } catch (const Error& e) {
    violation("/profile", e.what());
  }
  return profile;
}

NumericsConfig parse_numerics(const json& j, bool strict,
                              std::vector<std::string>* warnings) {
  NumericsConfig n;
  if (j.is_null()) return n;
  if (!j.is_object()) violation("/numerics", "expected an object");
  check_keys(j, "/numerics",
             {"rel_tol",      "ode_tol",       "kappa_cutoff", "omega_max",
              "omega_points", "k_min",         "k_max",        "k_points",
              "k",            "band",          "lambda_min",   "lambda_max",
              "lambda_points", "contrast_tau", "kappa_min",    "kappa_panels",
              "gl_order",     "G0_values",     "tau_values",
              "linearize_lower_band",          "k_cutoff",     "time",
              "times",        "dx_max",        "y_max",        "n_dx",
              "n_y",          "map_k_max",     "map_kappa_max", "lattice",
              "t_start",      "t_end",         "refinements"},
             strict, warnings);
  n.rel_tol = opt_number(j, "/numerics", "rel_tol", n.rel_tol);
  n.ode_tol = opt_number(j, "/numerics", "ode_tol", n.ode_tol);
  n.kappa_cutoff = opt_number(j, "/numerics", "kappa_cutoff", n.kappa_cutoff);
  n.omega_max = opt_number(j, "/numerics", "omega_max", n.omega_max);
  n.omega_points = opt_size(j, "/numerics", "omega_points", n.omega_points);
  n.k_min = opt_number(j, "/numerics", "k_min", n.k_min);
  n.k_max = opt_number(j, "/numerics", "k_max", n.k_max);
  n.k_points = opt_size(j, "/numerics", "k_points", n.k_points);
  n.k = opt_number(j, "/numerics", "k", n.k);
  if (j.contains("band")) {
    const std::string b = j["band"].is_string() ? j["band"].get<std::string>() : "";
    if (b == "lower") {
      n.band = Band::lower;
    } else if (b == "upper") {
      n.band = Band::upper;
    } else {
      violation("/numerics/band", "expected \"lower\" or \"upper\"");
    }
  }
  n.lambda_min = opt_number(j, "/numerics", "lambda_min", n.lambda_min);
  n.lambda_max = opt_number(j, "/numerics", "lambda_max", n.lambda_max);
  n.lambda_points = opt_size(j, "/numerics", "lambda_points", n.lambda_points);
  n.contrast_tau = opt_number(j, "/numerics", "contrast_tau", n.contrast_tau);
  n.kappa_min = opt_number(j, "/numerics", "kappa_min", n.kappa_min);
  n.kappa_panels = opt_size(j, "/numerics", "kappa_panels", n.kappa_panels);
  n.gl_order = opt_size(j, "/numerics", "gl_order", n.gl_order);
  n.G0_values = opt_number_array(j, "/numerics", "G0_values");
  n.tau_values = opt_number_array(j, "/numerics", "tau_values");
  n.linearize_lower_band =
      opt_bool(j, "/numerics", "linearize_lower_band", n.linearize_lower_band);
  n.k_cutoff = opt_number(j, "/numerics", "k_cutoff", n.k_cutoff);
  n.time = opt_number(j, "/numerics", "time", n.time);
  n.times = opt_number_array(j, "/numerics", "times");
  n.dx_max = opt_number(j, "/numerics", "dx_max", n.dx_max);
  n.y_max = opt_number(j, "/numerics", "y_max", n.y_max);
  n.n_dx = opt_size(j, "/numerics", "n_dx", n.n_dx);
  n.n_y = opt_size(j, "/numerics", "n_y", n.n_y);
  n.map_k_max = opt_number(j, "/numerics", "map_k_max", n.map_k_max);
  n.map_kappa_max = opt_number(j, "/numerics", "map_kappa_max", n.map_kappa_max);
  n.t_start = opt_number(j, "/numerics", "t_start", n.t_start);
  n.t_end = opt_number(j, "/numerics", "t_end", n.t_end);
  n.refinements = opt_size(j, "/numerics", "refinements", n.refinements);

  if (j.contains("lattice")) {
    const json& l = j["lattice"];
    if (!l.is_object()) violation("/numerics/lattice", "expected an object");
    check_keys(l, "/numerics/lattice",
               {"y_extent", "dy", "dt_over_dy", "boundary", "probe_y",
                "reflection_tolerance"},
               strict, warnings);
    n.lattice.y_extent =
        opt_number(l, "/numerics/lattice", "y_extent", n.lattice.y_extent);
    n.lattice.dy = opt_number(l, "/numerics/lattice", "dy", n.lattice.dy);
    n.lattice.dt_over_dy =
        opt_number(l, "/numerics/lattice", "dt_over_dy", n.lattice.dt_over_dy);
    n.lattice.probe_y =
        opt_number(l, "/numerics/lattice", "probe_y", n.lattice.probe_y);
    n.lattice.reflection_tolerance =
        opt_number(l, "/numerics/lattice", "reflection_tolerance",
                   n.lattice.reflection_tolerance);
    if (l.contains("boundary")) {
      const std::string b =
          l["boundary"].is_string() ? l["boundary"].get<std::string>() : "";
      if (b == "large-domain") {
        n.lattice.boundary = LatticeConfig::Boundary::large_domain;
      } else if (b == "outgoing-absorbing") {
        n.lattice.boundary = LatticeConfig::Boundary::outgoing_absorbing;
      } else {
        violation("/numerics/lattice/boundary",
                  "expected \"large-domain\" or \"outgoing-absorbing\"");
      }
    }
  }

  for (auto [name, value] : {std::pair<const char*, double>{"rel_tol", n.rel_tol},
                             {"ode_tol", n.ode_tol}}) {
    if (!(value > 0.0)) {
      violation(std::string("/numerics/") + name, "tolerance must be > 0");
    }
  }
  return n;
}

RunConfig parse_json(const json& j, bool strict,
                     std::vector<std::string>* warnings) {
  if (!j.is_object()) violation("", "config root must be an object");
  check_keys(j, "", {"scenario", "medium", "G0", "profile", "numerics", "output"},
             strict, warnings);

  RunConfig cfg;
  if (!j.contains("scenario") || !j["scenario"].is_string()) {
    violation("/scenario", "required field missing");
  }
  const auto scen = scenario_from_name(j["scenario"].get<std::string>());
  if (!scen) violation("/scenario", "unknown scenario");
  cfg.scenario = *scen;

  if (!j.contains("medium") || !j["medium"].is_object()) {
    violation("/medium", "required field missing");
  }
  check_keys(j["medium"], "/medium", {"omega", "g"}, strict, warnings);
  cfg.medium.omega = need_number(j["medium"], "/medium", "omega");
  cfg.medium.g = need_number(j["medium"], "/medium", "g");
  try {
    validate_params(cfg.medium);
  } catch (const Error& e) {
    violation("/medium", e.what());
  }

  cfg.G0 = opt_number(j, "", "G0", 0.0);
  if (cfg.G0 < 0.0) violation("/G0", "coupling must be >= 0");

  if (j.contains("profile")) {
    cfg.profile = parse_profile(j["profile"], strict, warnings);
  }
  cfg.numerics = parse_numerics(j.value("numerics", json()), strict, warnings);

  if (j.contains("output")) {
    const json& o = j["output"];
    if (!o.is_object()) violation("/output", "expected an object");
    check_keys(o, "/output", {"formats"}, strict, warnings);
    if (o.contains("formats")) {
      if (!o["formats"].is_array()) violation("/output/formats", "expected an array");
      cfg.output.formats.clear();
      for (const auto& f : o["formats"]) {
        if (!f.is_string()) violation("/output/formats", "expected strings");
        const std::string s = f.get<std::string>();
        if (s != "csv" && s != "json") {
          violation("/output/formats", "unknown format '" + s + "'");
        }
        cfg.output.formats.push_back(s);
      }
    }
  }

  // scenario-specific requirements
  const auto need_profile = [&]() {
    if (!cfg.profile) violation("/profile", "required field missing");
  };
  switch (cfg.scenario) {
    case Scenario::dispersion:
      if (!j.contains("G0")) violation("/G0", "required field missing");
      break;
    case Scenario::bands:
      break;
    case Scenario::spectrum:
      need_profile();
      break;
    case Scenario::yield_sweep:
      need_profile();
      if (!std::holds_alternative<LorentzianProfile>(*cfg.profile)) {
        violation("/profile/type",
                  "yield-sweep compares against the Lorentzian closed form");
      }
      break;
    case Scenario::exact_vs_perturbative:
      need_profile();
      if (!(cfg.numerics.k > 0.0)) violation("/numerics/k", "required field (> 0)");
      break;
    case Scenario::correlation_map:
      need_profile();
      if (!(cfg.numerics.time > 0.0)) {
        violation("/numerics/time", "required field (> 0)");
      }
      break;
    case Scenario::sudden_switch:
      if (!j.contains("G0")) violation("/G0", "required field missing");
      if (!(cfg.numerics.k > 0.0)) violation("/numerics/k", "required field (> 0)");
      break;
    case Scenario::oracle_compare:
      need_profile();
      if (!(cfg.numerics.k > 0.0)) violation("/numerics/k", "required field (> 0)");
      break;
  }

  cfg.echo = j.dump();
  return cfg;
}

}  // namespace

RunConfig parse_config_text(const std::string& text, bool strict,
                            std::vector<std::string>* warnings) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::SchemaViolation, std::string(": ") + e.what());
  }
  return parse_json(j, strict, warnings);
}

RunConfig parse_config(const std::string& path, bool strict,
                       std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::IOError, "cannot open config file: " + path);
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str(), strict, warnings);
}

std::string config_schema_json() {
  // hand-maintained; `schema` prints this for discoverability
  static const char* kSchema = R"json({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "qrad run configuration",
  "type": "object",
  "required": ["scenario", "medium"],
  "additionalProperties": false,
  "properties": {
    "scenario": {"enum": ["dispersion", "bands", "spectrum", "yield-sweep",
                           "exact-vs-perturbative", "correlation-map",
                           "sudden-switch", "oracle-compare"]},
    "medium": {
      "type": "object",
      "required": ["omega", "g"],
      "additionalProperties": false,
      "properties": {
        "omega": {"type": "number", "exclusiveMinimum": 0},
        "g": {"type": "number", "minimum": 0}
      }
    },
    "G0": {"type": "number", "minimum": 0,
            "description": "static coupling (dispersion, sudden-switch)"},
    "profile": {
      "type": "object",
      "required": ["type"],
      "properties": {
        "type": {"enum": ["lorentzian", "gaussian", "step", "window", "sampled"]},
        "G0": {"type": "number", "minimum": 0},
        "tau": {"type": "number", "exclusiveMinimum": 0},
        "t_on": {"type": "number"},
        "t_off": {"type": "number"},
        "ramp": {"type": "number", "minimum": 0},
        "path": {"type": "string", "description": "two-column CSV (time,value)"}
      }
    },
    "numerics": {
      "type": "object",
      "additionalProperties": false,
      "properties": {
        "rel_tol": {"type": "number"}, "ode_tol": {"type": "number"},
        "kappa_cutoff": {"type": "number"},
        "omega_max": {"type": "number"}, "omega_points": {"type": "integer"},
        "k_min": {"type": "number"}, "k_max": {"type": "number"},
        "k_points": {"type": "integer"},
        "k": {"type": "number"}, "band": {"enum": ["lower", "upper"]},
        "lambda_min": {"type": "number"}, "lambda_max": {"type": "number"},
        "lambda_points": {"type": "integer"}, "contrast_tau": {"type": "number"},
        "kappa_min": {"type": "number"}, "kappa_panels": {"type": "integer"},
        "gl_order": {"type": "integer"},
        "G0_values": {"type": "array", "items": {"type": "number"}},
        "tau_values": {"type": "array", "items": {"type": "number"}},
        "linearize_lower_band": {"type": "boolean"},
        "k_cutoff": {"type": "number"},
        "time": {"type": "number"},
        "times": {"type": "array", "items": {"type": "number"}},
        "dx_max": {"type": "number"}, "y_max": {"type": "number"},
        "n_dx": {"type": "integer"}, "n_y": {"type": "integer"},
        "map_k_max": {"type": "number"}, "map_kappa_max": {"type": "number"},
        "lattice": {
          "type": "object",
          "additionalProperties": false,
          "properties": {
            "y_extent": {"type": "number"}, "dy": {"type": "number"},
            "dt_over_dy": {"type": "number", "maximum": 0.9},
            "boundary": {"enum": ["large-domain", "outgoing-absorbing"]},
            "probe_y": {"type": "number"},
            "reflection_tolerance": {"type": "number"}
          }
        },
        "t_start": {"type": "number"}, "t_end": {"type": "number"},
        "refinements": {"type": "integer"}
      }
    },
    "output": {
      "type": "object",
      "additionalProperties": false,
      "properties": {
        "formats": {"type": "array", "items": {"enum": ["csv", "json"]}}
      }
    }
  }
})json";
  return kSchema;
}

}  // namespace qrad
