#include "qrad/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

#include <nlohmann/json.hpp>

#include "qrad/bogoliubov.hpp"
#include "qrad/correlations.hpp"
#include "qrad/csv.hpp"
#include "qrad/errors.hpp"
#include "qrad/lattice.hpp"
#include "qrad/permittivity.hpp"
#include "qrad/spectrum.hpp"

namespace qrad {

namespace {

namespace fs = std::filesystem;

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> v(n);
  if (n == 1) {
    v[0] = a;
    return v;
  }
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = a + (b - a) * double(i) / double(n - 1);
  }
  return v;
}

std::vector<double> geomspace(double a, double b, std::size_t n) {
  std::vector<double> v(n);
  if (n == 1) {
    v[0] = a;
    return v;
  }
  const double r = std::log(b / a) / double(n - 1);
  for (std::size_t i = 0; i < n; ++i) v[i] = a * std::exp(r * double(i));
  v.back() = b;
  return v;
}

double fit_loglog_slope(const std::vector<double>& x,
                        const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double m = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) continue;
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    m += 1.0;
  }
  if (m < 2.0) return 0.0;
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

double profile_tau_or(const SwitchingProfile& G, double fallback) {
  if (std::holds_alternative<LorentzianProfile>(G)) {
    return std::get<LorentzianProfile>(G).tau;
  }
  if (std::holds_alternative<GaussianProfile>(G)) {
    return std::get<GaussianProfile>(G).tau;
  }
  return fallback;
}

struct Emitter {
  const RunConfig& cfg;
  fs::path dir;
  RunReport& report;

  bool wants(const std::string& fmt) const {
    return std::find(cfg.output.formats.begin(), cfg.output.formats.end(),
                     fmt) != cfg.output.formats.end();
  }
  std::string file(const std::string& name) {
    report.artifacts.push_back(name);
    return (dir / name).string();
  }
};

void run_dispersion(const RunConfig& cfg, Emitter& em, unsigned) {
  const double n = cfg.medium.refractive_index();
  const double omega_max = cfg.numerics.omega_max > 0.0
                               ? cfg.numerics.omega_max
                               : 4.0 * cfg.medium.upper_band_bottom();
  const auto omegas = linspace(0.0, omega_max, cfg.numerics.omega_points);

  double peak_im = -1.0, peak_omega = 0.0;
  if (em.wants("csv")) {
    CsvWriter eps_csv(em.file("eps.csv"), "complex permittivity eps(omega)");
    eps_csv.metadata("omega", cfg.medium.omega);
    eps_csv.metadata("g", cfg.medium.g);
    eps_csv.metadata("G0", cfg.G0);
    eps_csv.header({"omega", "re", "im"});
    CsvWriter kw_csv(em.file("wavenumber.csv"),
                     "complex wavenumber k(omega) = omega sqrt(eps)");
    kw_csv.metadata("G0", cfg.G0);
    kw_csv.header({"omega", "re", "im"});
    for (double w : omegas) {
      try {
        const Complex e = permittivity(cfg.medium, cfg.G0, w).value;
        eps_csv.row({w, e.real(), e.imag()});
        if (e.imag() > peak_im) {
          peak_im = e.imag();
          peak_omega = w;
        }
        const Complex k = w > 0.0 ? complex_wavenumber(cfg.medium, cfg.G0, w)
                                  : Complex(0.0, 0.0);
        kw_csv.row({w, k.real(), k.imag()});
      } catch (const Error&) {
        // lossless pole at omega = Omega: emit the infinity marker
        const double inf = std::numeric_limits<double>::infinity();
        eps_csv.row({w, inf, 0.0});
        kw_csv.row({w, inf, 0.0});
      }
    }
  } else {
    for (double w : omegas) {
      try {
        const Complex e = permittivity(cfg.medium, cfg.G0, w).value;
        if (e.imag() > peak_im) {
          peak_im = e.imag();
          peak_omega = w;
        }
      } catch (const Error&) {
      }
    }
  }
  const DampingInfo damp = damping_info(cfg.medium, cfg.G0);
  em.report.headline["im_eps_peak_omega"] = peak_omega;
  em.report.headline["eps0"] = permittivity(cfg.medium, cfg.G0, 0.0).value.real();
  em.report.headline["n_squared"] = n * n;
  em.report.headline["gamma"] = damp.gamma;
  em.report.headline["im_sqrt_eps_slope"] = damp.im_sqrt_eps_slope;
  em.report.convergence["grid"] = true;
}

void run_bands(const RunConfig& cfg, Emitter& em, unsigned) {
  const double k_max = cfg.numerics.k_max > 0.0 ? cfg.numerics.k_max
                                                : 50.0 * cfg.medium.omega;
  const auto ks = linspace(cfg.numerics.k_min, k_max, cfg.numerics.k_points);
  const BandDispersion d = sample_bands(cfg.medium, ks);
  if (em.wants("csv")) {
    CsvWriter csv(em.file("bands.csv"), "polariton bands omega_pm(k)");
    csv.metadata("omega", cfg.medium.omega);
    csv.metadata("g", cfg.medium.g);
    csv.header({"k", "omega_minus", "omega_plus"});
    for (std::size_t i = 0; i < ks.size(); ++i) {
      csv.row({d.k[i], d.omega_minus[i], d.omega_plus[i]});
    }
  }
  const double n = cfg.medium.refractive_index();
  em.report.headline["omega_plus_at_0"] =
      band_frequencies(cfg.medium, 0.0).second;
  em.report.headline["band_gap"] = (n - 1.0) * cfg.medium.omega;
  em.report.headline["lower_asymptote_dev"] =
      std::abs(d.omega_minus.back() - cfg.medium.omega);
  em.report.headline["upper_asymptote_dev"] = std::abs(d.omega_plus.back() - k_max);
  em.report.convergence["grid"] = true;
}

void run_spectrum(const RunConfig& cfg, Emitter& em, unsigned) {
  const SwitchingProfile& G = *cfg.profile;
  const double n = cfg.medium.refractive_index();
  const double tau = profile_tau_or(G, 1.0 / cfg.medium.omega);
  const double k_max =
      cfg.numerics.k_max > 0.0 ? cfg.numerics.k_max : 6.0 * n / tau;
  const auto ks = linspace(cfg.numerics.k_min, k_max, cfg.numerics.k_points);

  KappaQuadrature quad;
  quad.lambda = cfg.numerics.kappa_cutoff;
  quad.rel_tol = cfg.numerics.rel_tol;
  const SpectrumResult r = spectrum_first_order(cfg.medium, G, ks, quad);

  if (em.wants("csv")) {
    CsvWriter csv(em.file("spectrum.csv"),
                  "created particles per mode, first order");
    csv.metadata("kappa_cutoff", r.kappa_cutoff);
    csv.metadata("converged", r.converged ? "true" : "false");
    csv.header({"k", "n_minus", "n_plus", "err_minus", "err_plus"});
    for (std::size_t i = 0; i < ks.size(); ++i) {
      csv.row({r.k[i], r.n_minus[i], r.n_plus[i], r.err_minus[i], r.err_plus[i]});
    }
  }
  const double nm_max = *std::max_element(r.n_minus.begin(), r.n_minus.end());
  const double np_max = *std::max_element(r.n_plus.begin(), r.n_plus.end());
  em.report.headline["n_minus_max"] = nm_max;
  em.report.headline["n_plus_max"] = np_max;
  em.report.headline["upper_band_suppression"] =
      nm_max > 0.0 ? np_max / nm_max : 0.0;
  em.report.convergence["kappa_quadrature"] = r.converged;
  if (!r.converged) em.report.status = RunStatus::not_converged;
}

void run_yield_sweep(const RunConfig& cfg, Emitter& em, unsigned) {
  const auto& base = std::get<LorentzianProfile>(*cfg.profile);
  std::vector<double> g0s = cfg.numerics.G0_values;
  std::vector<double> taus = cfg.numerics.tau_values;
  if (g0s.empty()) g0s = {base.G0};
  if (taus.empty()) taus = {base.tau};

  KappaQuadrature quad;
  quad.rel_tol = cfg.numerics.rel_tol;
  YieldOptions yopt;
  yopt.linearize_lower_band = cfg.numerics.linearize_lower_band;
  yopt.k_cutoff = cfg.numerics.k_cutoff;

  std::vector<std::vector<double>> rows;
  bool all_ok = true;
  for (double tau : taus) {
    for (double g0 : g0s) {
      quad.lambda = cfg.numerics.kappa_cutoff;
      const YieldResult yq =
          total_yield(cfg.medium, LorentzianProfile{g0, tau}, yopt, quad);
      const YieldResult yc = lorentzian_yield_closed_form(cfg.medium, g0, tau);
      all_ok = all_ok && yq.converged;
      rows.push_back({g0, tau, yq.N_over_l, yc.N_over_l,
                      yc.N_over_l > 0.0 ? yq.N_over_l / yc.N_over_l : 0.0});
    }
  }
  if (em.wants("csv")) {
    CsvWriter csv(em.file("yield_sweep.csv"),
                  "lower-band yield: double quadrature vs closed form");
    csv.metadata("linearize_lower_band",
                 yopt.linearize_lower_band ? "true" : "false");
    csv.header({"G0", "tau", "N_over_l_quadrature", "N_over_l_closed", "C0"});
    for (const auto& r : rows) csv.row(r);
  }
  // C0 statistics and scaling exponents
  double c0_min = 1e300, c0_max = 0.0, c0_sum = 0.0;
  for (const auto& r : rows) {
    c0_min = std::min(c0_min, r[4]);
    c0_max = std::max(c0_max, r[4]);
    c0_sum += r[4];
  }
  std::vector<double> xg, yg, xt, yt;
  for (const auto& r : rows) {
    if (r[1] == taus.front()) {
      xg.push_back(r[0]);
      yg.push_back(r[2]);
    }
    if (r[0] == g0s.front()) {
      xt.push_back(r[1]);
      yt.push_back(r[2]);
    }
  }
  em.report.headline["C0_mean"] = c0_sum / double(rows.size());
  em.report.headline["C0_rel_spread"] =
      c0_min > 0.0 ? (c0_max - c0_min) / c0_min : 0.0;
  em.report.headline["exponent_G0"] = fit_loglog_slope(xg, yg);
  em.report.headline["exponent_tau"] = fit_loglog_slope(xt, yt);
  em.report.convergence["quadrature"] = all_ok;
  if (!all_ok) em.report.status = RunStatus::not_converged;
}

void run_exact_vs_perturbative(const RunConfig& cfg, Emitter& em,
                               unsigned threads) {
  const SwitchingProfile& base = *cfg.profile;
  const double k = cfg.numerics.k;
  const double tau = profile_tau_or(base, 1.0 / cfg.medium.omega);
  std::vector<double> g0s = cfg.numerics.G0_values;
  if (g0s.empty()) {
    const double s = std::sqrt(cfg.medium.omega);
    g0s = {0.05 * s, 0.1 * s, 0.2 * s};
  }
  const double kappa_min =
      cfg.numerics.kappa_min > 0.0 ? cfg.numerics.kappa_min : 1e-3 / tau;
  const double lambda =
      cfg.numerics.kappa_cutoff > 0.0 ? cfg.numerics.kappa_cutoff : 40.0 / tau;
  const KappaGrid grid = make_kappa_grid(kappa_min, lambda,
                                         cfg.numerics.kappa_panels,
                                         cfg.numerics.gl_order);

  ExtractOptions xopt;
  xopt.mode.ode.rel_tol = cfg.numerics.ode_tol;
  xopt.mode.ode.abs_tol = 1e-2 * cfg.numerics.ode_tol;
  xopt.threads = threads;

  std::vector<double> devs;
  std::vector<double> defects;
  const int bi = band_index(cfg.numerics.band);
  for (std::size_t gi = 0; gi < g0s.size(); ++gi) {
    const SwitchingProfile prof = profile_scaled(
        profile_scaled(base, 1.0 / profile_peak(base)), g0s[gi]);
    const ExactBogoliubov ex = extract_bogoliubov(cfg.medium, prof, k, grid, xopt);
    defects.push_back(unitarity_defect(ex));

    double bmax = 0.0;
    std::vector<double> bfirst(grid.nodes.size());
    for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
      bfirst[i] = std::abs(first_order_coeffs(cfg.medium, prof, k,
                                              grid.nodes[i], cfg.numerics.band)
                               .beta);
      bmax = std::max(bmax, bfirst[i]);
    }
    // relative deviation where the coefficient is non-negligible
    std::vector<double> rel;
    CsvWriter csv(em.file("beta_compare_" + std::to_string(gi) + ".csv"),
                  "exact vs first-order |beta_env(kappa)|");
    csv.metadata("G0", g0s[gi]);
    csv.metadata("k", k);
    csv.header({"kappa", "abs_beta_exact", "abs_beta_first", "rel_dev"});
    for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
      const double be = std::abs(ex.beta_env[bi][i]);
      const double dev = bfirst[i] > 1e-2 * bmax
                             ? std::abs(be - bfirst[i]) / bfirst[i]
                             : 0.0;
      if (bfirst[i] > 1e-2 * bmax) rel.push_back(dev);
      csv.row({grid.nodes[i], be, bfirst[i], dev});
    }
    std::nth_element(rel.begin(), rel.begin() + rel.size() / 2, rel.end());
    devs.push_back(rel[rel.size() / 2]);
  }
  CsvWriter csv(em.file("cross_check.csv"),
                "first-order residual vs switching amplitude");
  csv.header({"G0", "median_rel_dev", "unitarity_defect"});
  for (std::size_t i = 0; i < g0s.size(); ++i) {
    csv.row({g0s[i], devs[i], defects[i]});
  }
  em.report.headline["residual_exponent"] = fit_loglog_slope(g0s, devs);
  em.report.headline["rel_dev_at_min_G0"] = devs.front();
  em.report.headline["max_unitarity_defect"] =
      *std::max_element(defects.begin(), defects.end());
  em.report.convergence["unitarity"] =
      em.report.headline["max_unitarity_defect"] < 1e-3;
  if (!em.report.convergence["unitarity"]) {
    em.report.status = RunStatus::not_converged;
  }
}

void run_correlation_map(const RunConfig& cfg, Emitter& em, unsigned threads) {
  const SwitchingProfile& G = *cfg.profile;
  const double t = cfg.numerics.time;
  const double n = cfg.medium.refractive_index();
  const double tau = profile_tau_or(G, 1.0 / cfg.medium.omega);

  CorrelationGrid grid;
  grid.dx_max = cfg.numerics.dx_max > 0.0 ? cfg.numerics.dx_max : 1.5 * t / n;
  grid.y_max = cfg.numerics.y_max > 0.0 ? cfg.numerics.y_max : 1.5 * t;
  const double cell = tau / 8.0;
  grid.n_dx = cfg.numerics.n_dx > 0
                  ? cfg.numerics.n_dx
                  : 2 * std::size_t(std::ceil(grid.dx_max / cell)) + 1;
  grid.n_y = cfg.numerics.n_y > 0
                 ? cfg.numerics.n_y
                 : 2 * std::size_t(std::ceil(grid.y_max / cell)) + 1;
  CorrelationCutoffs cut;
  cut.k_max = cfg.numerics.map_k_max;
  cut.kappa_max = cfg.numerics.map_kappa_max;

  const CorrelationMap m = cross_correlation_map(cfg.medium, G, t, grid, cut,
                                                 OperatorOrder::phi_first,
                                                 threads);
  if (em.wants("csv")) {
    CsvWriter csv(em.file("correlation_map.csv"),
                  "equal-time <Phi(t,x,y) A(t,x')> to first order");
    csv.metadata("t", t);
    csv.metadata("k_max", m.k_max);
    csv.metadata("kappa_max", m.kappa_max);
    csv.header({"dx", "y", "re", "im", "abs"});
    for (std::size_t i = 0; i < m.y.size(); ++i) {
      for (std::size_t j = 0; j < m.dx.size(); ++j) {
        const Complex v = m.value[i][j];
        csv.row({m.dx[j], m.y[i], v.real(), v.imag(), std::abs(v)});
      }
    }
  }
  const auto peaks = locate_peaks(m);
  if (em.wants("json")) {
    nlohmann::json jp = nlohmann::json::array();
    for (const auto& p : peaks) {
      jp.push_back({{"dx", p.dx}, {"y", p.y}, {"magnitude", p.magnitude}});
    }
    std::ofstream out(em.file("peaks.json"));
    out << jp.dump(2) << "\n";
  }
  em.report.headline["peak_dx"] = std::abs(peaks.front().dx);
  em.report.headline["peak_y"] = std::abs(peaks.front().y);
  em.report.headline["peak_magnitude"] = peaks.front().magnitude;
  em.report.headline["expected_dx"] = t / n;
  em.report.headline["expected_y"] = t;
  em.report.headline["n_peaks"] = double(peaks.size());
  em.report.convergence["peaks_found"] = true;
}

void run_sudden_switch(const RunConfig& cfg, Emitter& em, unsigned) {
  const double k = cfg.numerics.k;
  const double wb = band_frequency(cfg.medium, k, cfg.numerics.band);
  const double lam_min = cfg.numerics.lambda_min > 0.0
                             ? cfg.numerics.lambda_min
                             : 10.0 * std::max(wb, cfg.medium.omega);
  const double lam_max = cfg.numerics.lambda_max > 0.0
                             ? cfg.numerics.lambda_max
                             : 400.0 * lam_min;
  const auto lambdas = geomspace(lam_min, lam_max, cfg.numerics.lambda_points);

  const CutoffScan step_scan = sudden_switch_cutoff_scan(
      cfg.medium, cfg.G0, k, cfg.numerics.band, lambdas);

  CutoffScan smooth_scan;
  const bool with_contrast = cfg.numerics.contrast_tau > 0.0;
  if (with_contrast) {
    smooth_scan = cutoff_scan(cfg.medium,
                              LorentzianProfile{cfg.G0, cfg.numerics.contrast_tau},
                              k, cfg.numerics.band, lambdas);
  }
  if (em.wants("csv")) {
    CsvWriter csv(em.file("cutoff_scan.csv"),
                  "n(k; Lambda) under a step switch-off");
    csv.metadata("k", k);
    csv.metadata("G0", cfg.G0);
    csv.metadata("band", band_name(cfg.numerics.band));
    std::vector<std::string> cols = {"lambda", "n_step"};
    if (with_contrast) cols.push_back("n_lorentzian");
    csv.header(cols);
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      std::vector<double> row = {lambdas[i], step_scan.n[i]};
      if (with_contrast) row.push_back(smooth_scan.n[i]);
      csv.row(row);
    }
  }
  em.report.headline["monotone"] = step_scan.monotone ? 1.0 : 0.0;
  em.report.headline["min_rel_increase_per_doubling"] =
      *std::min_element(step_scan.rel_increase_per_doubling.begin(),
                        step_scan.rel_increase_per_doubling.end());
  em.report.headline["loglog_slope_top_decade"] =
      step_scan.loglog_slope_top_decade;
  em.report.headline["dn_dlog2_top_decade"] = step_scan.dn_dlog2_top_decade;
  if (with_contrast) {
    em.report.headline["contrast_max_rel_increase"] =
        *std::max_element(smooth_scan.rel_increase_per_doubling.begin(),
                          smooth_scan.rel_increase_per_doubling.end());
  }
  em.report.convergence["scan"] = true;
}

void run_oracle_compare(const RunConfig& cfg, Emitter& em, unsigned) {
  const SwitchingProfile& G = *cfg.profile;
  const double k = cfg.numerics.k;
  const double tau = profile_tau_or(G, 1.0 / cfg.medium.omega);
  const double t0 =
      cfg.numerics.t_end > cfg.numerics.t_start ? cfg.numerics.t_start : -3.0 * tau;
  const double t1 =
      cfg.numerics.t_end > cfg.numerics.t_start ? cfg.numerics.t_end : 3.0 * tau;

  const HopfieldBasis basis = hopfield_diagonalize(cfg.medium, k);
  ModeState init = polariton_mode_state(cfg.medium, basis, Band::lower, t0);
  init.t = t0;

  LatticeConfig lat = cfg.numerics.lattice;
  // large-domain default: nothing reflected can return within the window
  if (lat.boundary == LatticeConfig::Boundary::large_domain) {
    lat.y_extent = std::max(lat.y_extent, 0.55 * (t1 - t0) + 2.0 * lat.dy);
  }

  EliminationOptions eopt;
  eopt.ode.rel_tol = cfg.numerics.ode_tol;
  eopt.ode.abs_tol = 1e-2 * cfg.numerics.ode_tol;

  std::vector<double> dys, dists;
  for (std::size_t r = 0; r <= cfg.numerics.refinements; ++r) {
    LatticeConfig c = lat;
    c.dy = lat.dy / double(1u << r);
    const EliminationReport rep =
        compare_elimination(cfg.medium, G, k, c, init, t1, 1e-4, eopt);
    dys.push_back(c.dy);
    dists.push_back(rep.distance);
  }
  EliminationOptions control = eopt;
  control.advanced_elimination = true;
  const EliminationReport bad =
      compare_elimination(cfg.medium, G, k, lat, init, t1, 1e-4, control);

  if (em.wants("csv")) {
    CsvWriter csv(em.file("oracle_convergence.csv"),
                  "lattice vs memory-eliminated ODE: relative L2 over Psi");
    csv.metadata("k", k);
    csv.header({"dy", "rel_l2_distance"});
    for (std::size_t i = 0; i < dys.size(); ++i) csv.row({dys[i], dists[i]});

    // trajectory dump at the coarsest lattice
    std::vector<double> times = linspace(t0, t1, 401);
    times.erase(times.begin());
    LatticeRunOptions lopt;
    const LatticeTrajectory traj =
        evolve_lattice_mode(cfg.medium, G, k, lat, init, times, lopt);
    CsvWriter tcsv(em.file("oracle_trajectory.csv"), "lattice trajectory at y=0");
    tcsv.header({"t", "re_psi", "im_psi", "re_a", "im_a", "re_phi0", "im_phi0"});
    for (const auto& s : traj.samples) {
      tcsv.row({s.t, s.mode.Psi.real(), s.mode.Psi.imag(), s.mode.A.real(),
                s.mode.A.imag(), s.phi_origin.real(), s.phi_origin.imag()});
    }
  }
  double order = 0.0;
  if (dists.size() >= 2 && dists.back() > 0.0) {
    order = std::log2(dists[dists.size() - 2] / dists.back());
  }
  em.report.headline["distance_finest"] = dists.back();
  em.report.headline["convergence_order"] = order;
  em.report.headline["control_distance_advanced"] = bad.distance;
  em.report.convergence["elimination"] = dists.back() < 1e-4;
  em.report.convergence["control_fails"] = bad.distance > 0.1;
  if (!em.report.convergence["elimination"]) {
    em.report.status = RunStatus::not_converged;
  }
}

}  // namespace

std::string RunReport::to_json() const {
  nlohmann::json j;
  j["scenario"] = scenario;
  j["status"] = status == RunStatus::ok
                    ? "ok"
                    : (status == RunStatus::not_converged ? "not-converged"
                                                          : "error");
  j["headline"] = headline;
  j["convergence"] = convergence;
  j["artifacts"] = artifacts;
  if (!config_echo.empty()) {
    j["config"] = nlohmann::json::parse(config_echo);
  }
  if (!message.empty()) j["message"] = message;
  j["metadata"] = {{"wall_time_ms", wall_time_ms}};
  return j.dump(2);
}

RunReport run_scenario(const RunConfig& cfg, const std::string& out_dir,
                       unsigned threads) {
  const auto t_begin = std::chrono::steady_clock::now();
  RunReport report;
  report.scenario = scenario_name(cfg.scenario);
  report.config_echo = cfg.echo;

  Emitter em{cfg, fs::path(out_dir), report};
  try {
    fs::create_directories(em.dir);
    switch (cfg.scenario) {
      case Scenario::dispersion: run_dispersion(cfg, em, threads); break;
      case Scenario::bands: run_bands(cfg, em, threads); break;
      case Scenario::spectrum: run_spectrum(cfg, em, threads); break;
      case Scenario::yield_sweep: run_yield_sweep(cfg, em, threads); break;
      case Scenario::exact_vs_perturbative:
        run_exact_vs_perturbative(cfg, em, threads);
        break;
      case Scenario::correlation_map:
        run_correlation_map(cfg, em, threads);
        break;
      case Scenario::sudden_switch: run_sudden_switch(cfg, em, threads); break;
      case Scenario::oracle_compare: run_oracle_compare(cfg, em, threads); break;
    }
  } catch (const std::exception& e) {
    report.status = RunStatus::error;
    report.message = e.what();
  }

  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                t_begin)
          .count();
  try {
    std::ofstream out(em.dir / "report.json");
    out << report.to_json() << "\n";
    report.artifacts.push_back("report.json");
  } catch (...) {
    // report write failure must not mask the run result
  }
  return report;
}

}  // namespace qrad
