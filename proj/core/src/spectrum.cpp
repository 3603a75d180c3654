#include "qrad/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qrad/errors.hpp"

namespace qrad {

namespace {

constexpr double kPi = std::numbers::pi;

// characteristic switching time; 0 for the scale-free step
double profile_time_scale(const SwitchingProfile& G) {
  return std::visit(
      [](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, LorentzianProfile> ||
                      std::is_same_v<T, GaussianProfile>) {
          return p.tau;
        } else if constexpr (std::is_same_v<T, StepProfile>) {
          return 0.0;
        } else if constexpr (std::is_same_v<T, WindowProfile>) {
          return p.ramp > 0.0 ? p.ramp : 0.0;
        } else {
          return 0.25 * (p.t.back() - p.t.front());
        }
      },
      G);
}

double default_lambda(const SwitchingProfile& G, double requested) {
  if (requested > 0.0) return requested;
  const double tc = profile_time_scale(G);
  if (tc <= 0.0) {
    throw Error(ErrorCode::QuadratureNotConverged,
                "profile has no intrinsic frequency scale; supply an explicit "
                "kappa cutoff");
  }
  return 40.0 / tc;
}

struct BandDensity {
  double n = 0.0;
  double err = 0.0;
  bool quad_ok = false;
};

// n_b(k) = 2 Integral_0^Lambda w_b(k) kappa |Gtilde(w_b + kappa)|^2 dkappa
BandDensity band_density(const MediumParams& p, const SwitchingProfile& G,
                         double k, Band band, double lambda, double rel_tol,
                         double abs_tol) {
  BandDensity out;
  if (band == Band::lower && k == 0.0) {
    out.quad_ok = true;  // zero-frequency mode carries no particles
    return out;
  }
  QuadratureOptions qopt;
  qopt.rel_tol = rel_tol;
  qopt.abs_tol = abs_tol;
  const auto res = integrate_gk(
      [&](double kap) { return beta_sq_integrand(p, G, k, kap, band); }, 0.0,
      lambda, qopt);
  out.n = 2.0 * res.value;
  out.err = 2.0 * res.abs_error;
  out.quad_ok = res.converged;
  return out;
}

}  // namespace

SpectrumResult spectrum_first_order(const MediumParams& p,
                                    const SwitchingProfile& G,
                                    const std::vector<double>& k_grid,
                                    const KappaQuadrature& quad) {
  const double lambda = default_lambda(G, quad.lambda);
  SpectrumResult r;
  r.k = k_grid;
  r.kappa_cutoff = lambda;
  const size_t n = k_grid.size();
  r.n_minus.resize(n);
  r.n_plus.resize(n);
  r.err_minus.resize(n);
  r.err_plus.resize(n);

  bool all_ok = true;
  double worst_change = 0.0;
  for (size_t i = 0; i < n; ++i) {
    for (Band b : kBands) {
      const auto base = band_density(p, G, k_grid[i], b, lambda, quad.rel_tol,
                                     quad.abs_tol);
      // convergence probe: double the cutoff, tighten the tolerance
      const auto probe = band_density(p, G, k_grid[i], b, 2.0 * lambda,
                                      0.1 * quad.rel_tol, quad.abs_tol);
      const double scale = std::max(std::abs(probe.n), 1e-300);
      worst_change = std::max(worst_change, std::abs(probe.n - base.n) / scale);
      all_ok = all_ok && base.quad_ok && probe.quad_ok;
      if (b == Band::lower) {
        r.n_minus[i] = base.n;
        r.err_minus[i] = base.err;
      } else {
        r.n_plus[i] = base.n;
        r.err_plus[i] = base.err;
      }
    }
  }
  r.converged = all_ok && worst_change < 1e-3;
  return r;
}

YieldResult total_yield(const MediumParams& p, const SwitchingProfile& G,
                        const YieldOptions& opt, const KappaQuadrature& quad) {
  const double lambda = default_lambda(G, quad.lambda);
  const double n_idx = p.refractive_index();
  if (!opt.linearize_lower_band && opt.k_cutoff <= 0.0) {
    throw Error(ErrorCode::DivergentYield,
                "lower-band yield diverges without linearization or an "
                "explicit k cutoff");
  }

  QuadratureOptions inner;
  inner.rel_tol = quad.rel_tol;
  inner.abs_tol = quad.abs_tol;
  QuadratureOptions outer;
  outer.rel_tol = std::max(quad.rel_tol, 1e-9);

  // density of the lower band at wavenumber k, optionally with the band
  // linearized as w_- = k/n in both the weight and the transform argument
  auto density = [&](double k) -> double {
    if (k <= 0.0) return 0.0;
    double w, weight;
    if (opt.linearize_lower_band) {
      w = k / n_idx;
      const double rho = band_rho(p, k);
      const double sig = band_sigma(p, k);
      weight = (rho + sig) / (8.0 * rho * w);
    } else {
      w = band_frequency(p, k, Band::lower);
      weight = band_weight(p, k, Band::lower);
    }
    const auto res = integrate_gk(
        [&](double kap) {
          const double gt = std::abs(profile_fourier(G, w + kap).value);
          return kap * gt * gt;
        },
        0.0, lambda, inner);
    return 2.0 * weight * res.value;
  };

  YieldResult y;
  y.linearized = opt.linearize_lower_band;

  double K;
  if (opt.k_cutoff > 0.0) {
    K = opt.k_cutoff;
  } else {
    // spectral reach of the profile: double until Gtilde is negligible
    const double tc = profile_time_scale(G);
    if (tc > 0.0) {
      const double g0 = std::abs(profile_fourier(G, 0.0).value);
      double w_reach = 1.0 / tc;
      for (int i = 0; i < 60; ++i) {
        if (std::abs(profile_fourier(G, w_reach).value) <
            1e-9 * (g0 + 1e-300)) {
          break;
        }
        w_reach *= 2.0;
      }
      K = n_idx * w_reach;
    } else {
      K = 4.0 * n_idx * lambda;  // fat tails; rely on the tail extension below
    }
  }
  y.k_cutoff = K;

  auto outer_int = [&](double lo, double hi) {
    return integrate_gk([&](double k) { return density(k); }, lo, hi, outer);
  };

  auto res = outer_int(0.0, K);
  double total = res.value;
  bool ok = res.converged;
  if (opt.k_cutoff <= 0.0) {
    // extend until the tail is negligible
    for (int i = 0; i < 6; ++i) {
      const auto tail = outer_int(K, 2.0 * K);
      K *= 2.0;
      total += tail.value;
      ok = ok && tail.converged;
      if (std::abs(tail.value) < 1e-6 * std::abs(total)) break;
      if (i == 5) ok = false;
    }
    y.k_cutoff = K;
  }
  y.N_over_l = total / kPi;  // (1/2pi) * 2 (both signs of k)
  y.converged = ok;
  const double tc = profile_time_scale(G);
  y.asymptotic_regime = tc <= 0.0 || p.omega * tc >= 5.0;
  return y;
}

YieldResult lorentzian_yield_closed_form(const MediumParams& p, double G0,
                                         double tau) {
  const double n = p.refractive_index();
  const double gamma0 = 0.25 * G0 * G0;
  YieldResult y;
  y.N_over_l = gamma0 / (p.omega * tau * p.omega * tau) * (n * n - 1.0) /
               (8.0 * n);
  y.linearized = true;
  y.asymptotic_regime = p.omega * tau >= 5.0;
  return y;
}

YieldResult delta_n_yield_closed_form(const DeltaNPulse& pulse) {
  YieldResult y;
  y.N_over_l = (kPi / 16.0) * pulse.delta_n * pulse.delta_n /
               (pulse.n * pulse.tau);
  y.linearized = true;
  return y;
}

CutoffScan cutoff_scan(const MediumParams& p, const SwitchingProfile& G,
                       double k, Band band,
                       const std::vector<double>& lambdas) {
  for (size_t i = 1; i < lambdas.size(); ++i) {
    if (lambdas[i] <= lambdas[i - 1]) {
      throw Error(ErrorCode::NonFinite, "cutoff grid must be increasing");
    }
  }
  CutoffScan scan;
  scan.lambda = lambdas;
  QuadratureOptions qopt;
  qopt.rel_tol = 1e-10;
  for (double lam : lambdas) {
    const auto res = integrate_gk(
        [&](double kap) { return beta_sq_integrand(p, G, k, kap, band); }, 0.0,
        lam, qopt);
    scan.n.push_back(2.0 * res.value);
  }
  scan.monotone = true;
  for (size_t i = 1; i < scan.n.size(); ++i) {
    if (scan.n[i] <= scan.n[i - 1]) scan.monotone = false;
    const double octaves = std::log2(lambdas[i] / lambdas[i - 1]);
    scan.rel_increase_per_doubling.push_back(
        (scan.n[i] / scan.n[i - 1] - 1.0) / octaves);
  }
  // least-squares slopes over the top decade
  const double lam_lo = lambdas.back() / 10.0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0, m = 0;
  double tx = 0, ty = 0, txx = 0, txy = 0;
  for (size_t i = 0; i < lambdas.size(); ++i) {
    if (lambdas[i] < lam_lo || scan.n[i] <= 0.0) continue;
    const double lx = std::log(lambdas[i]), ly = std::log(scan.n[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    const double qx = std::log2(lambdas[i]);
    tx += qx;
    ty += scan.n[i];
    txx += qx * qx;
    txy += qx * scan.n[i];
    m += 1.0;
  }
  if (m >= 2.0) {
    scan.loglog_slope_top_decade = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    scan.dn_dlog2_top_decade = (m * txy - tx * ty) / (m * txx - tx * tx);
  }
  return scan;
}

CutoffScan sudden_switch_cutoff_scan(const MediumParams& p, double G0,
                                     double k, Band band,
                                     const std::vector<double>& lambdas) {
  return cutoff_scan(p, SwitchingProfile(StepProfile{G0}), k, band, lambdas);
}

}  // namespace qrad
