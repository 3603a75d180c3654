#include "qrad/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qrad/bands.hpp"
#include "qrad/errors.hpp"
#include "qrad/parallel.hpp"
#include "qrad/quadrature.hpp"

namespace qrad {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> symmetric_grid(double half, std::size_t n) {
  std::vector<double> g(n);
  if (n == 1) {
    g[0] = 0.0;
    return g;
  }
  for (std::size_t i = 0; i < n; ++i) {
    g[i] = -half + 2.0 * half * double(i) / double(n - 1);
  }
  return g;
}

double profile_scale_or(const SwitchingProfile& G, double fallback) {
  // reuse the spectral-reach idea: width tau for the closed forms
  if (std::holds_alternative<LorentzianProfile>(G)) {
    return std::get<LorentzianProfile>(G).tau;
  }
  if (std::holds_alternative<GaussianProfile>(G)) {
    return std::get<GaussianProfile>(G).tau;
  }
  return fallback;
}

struct Rules {
  GaussLegendreRule k_rule;
  GaussLegendreRule kappa_rule;
  double k_max;
  double kappa_max;
};

Rules build_rules(const MediumParams& p, const SwitchingProfile& G, double t,
                  const CorrelationGrid& grid,
                  const CorrelationCutoffs& cut) {
  Rules r;
  const double n_omega = p.upper_band_bottom();
  r.k_max = cut.k_max > 0.0 ? cut.k_max : 6.0 * n_omega;
  const double t_char = profile_scale_or(G, 1.0 / p.omega);
  const double wp_max = band_frequencies(p, r.k_max).second;
  r.kappa_max =
      cut.kappa_max > 0.0 ? cut.kappa_max : wp_max + 30.0 / t_char;

  // phase rates bound the oscillation of the integrands
  const double rate_k = grid.dx_max + grid.y_max + t;
  const double rate_kappa = grid.y_max + t;
  const double ppp = std::max(cut.points_per_period, 4.0);

  auto panels_for = [&](double extent, double rate) {
    const double nodes = ppp * extent * rate / (2.0 * kPi) + 32.0;
    return std::size_t(std::ceil(nodes / 16.0));
  };
  r.k_rule = composite_gauss_legendre(16, panels_for(r.k_max, rate_k), 0.0,
                                      r.k_max);
  r.kappa_rule = composite_gauss_legendre(
      16, panels_for(r.kappa_max, rate_kappa), 0.0, r.kappa_max);
  return r;
}

}  // namespace

CorrelationMap cross_correlation_map(const MediumParams& p,
                                     const SwitchingProfile& G, double t,
                                     const CorrelationGrid& grid,
                                     const CorrelationCutoffs& cutoffs,
                                     OperatorOrder order, unsigned threads) {
  const Rules rules = build_rules(p, G, t, grid, cutoffs);
  const std::size_t nk = rules.k_rule.nodes.size();
  const std::size_t nq = rules.kappa_rule.nodes.size();

  CorrelationMap m;
  m.t = t;
  m.dx = symmetric_grid(grid.dx_max, grid.n_dx);
  m.y = symmetric_grid(grid.y_max, grid.n_y);
  m.k_max = rules.k_max;
  m.kappa_max = rules.kappa_max;
  m.order = order;
  m.pair = FieldPair::phi_a;

  // unique |y| values (grid is symmetric); uy[i] owns row i of the quadrant
  std::vector<double> uy;
  std::vector<std::size_t> row_of(m.y.size());
  for (std::size_t i = 0; i < m.y.size(); ++i) {
    const double r = std::abs(m.y[i]);
    std::size_t j = 0;
    for (; j < uy.size(); ++j) {
      if (std::abs(uy[j] - r) < 1e-12 * (1.0 + r)) break;
    }
    if (j == uy.size()) uy.push_back(r);
    row_of[i] = j;
  }
  const std::size_t ny = uy.size();

  // CP[y][j] = w_j cos(kappa_j r) exp(-i kappa_j t): the kappa kernel shared
  // by every k node
  std::vector<std::vector<Complex>> CP(ny, std::vector<Complex>(nq));
  for (std::size_t yi = 0; yi < ny; ++yi) {
    for (std::size_t j = 0; j < nq; ++j) {
      const double q = rules.kappa_rule.nodes[j];
      CP[yi][j] = rules.kappa_rule.weights[j] * std::cos(q * uy[yi]) *
                  std::polar(1.0, -q * t);
    }
  }

  const bool swapped = (order == OperatorOrder::a_first);
  // V[y][k-node]: weighted k-integrand, assembled into the map below
  std::vector<std::vector<Complex>> V(ny, std::vector<Complex>(nk));

  parallel_for(nk, threads, [&](std::size_t ki) {
    const double k = rules.k_rule.nodes[ki];
    const double wk = rules.k_rule.weights[ki];
    const auto [wm, wp] = band_frequencies(p, k);
    const double rho = band_rho(p, k);
    const double base = p.g / (2.0 * rho);

    // Gtilde rows for both bands
    std::vector<Complex> gm_low(nq), gp_low(nq), gm_up(nq), gp_up(nq);
    for (std::size_t j = 0; j < nq; ++j) {
      const double q = rules.kappa_rule.nodes[j];
      gm_low[j] = std::conj(profile_fourier(G, wm - q).value);
      gp_low[j] = profile_fourier(G, wm + q).value;
      gm_up[j] = std::conj(profile_fourier(G, wp - q).value);
      gp_up[j] = profile_fourier(G, wp + q).value;
    }
    if (swapped) {
      // <A1 Phi0> contracts the conjugate env content: E instead of conj(E)
      for (std::size_t j = 0; j < nq; ++j) {
        gm_low[j] = std::conj(gm_low[j]);
        gp_low[j] = std::conj(gp_low[j]);
        gm_up[j] = std::conj(gm_up[j]);
        gp_up[j] = std::conj(gp_up[j]);
      }
    }

    const Complex em_low = std::polar(1.0, swapped ? -wm * t : wm * t);
    const Complex ep_low = std::conj(em_low);
    const Complex em_up = std::polar(1.0, swapped ? -wp * t : wp * t);
    const Complex ep_up = std::conj(em_up);
    const Complex env_pref =
        Complex(0.0, swapped ? 1.0 : -1.0) * std::pow(2.0 * kPi, -1.5) * 2.0;

    for (std::size_t yi = 0; yi < ny; ++yi) {
      Complex sm_low(0, 0), sp_low(0, 0), sm_up(0, 0), sp_up(0, 0);
      const std::vector<Complex>& cp = CP[yi];
      for (std::size_t j = 0; j < nq; ++j) {
        Complex kern = cp[j];
        if (swapped) kern = std::conj(kern);
        sm_low += kern * gm_low[j];
        sp_low += kern * gp_low[j];
        sm_up += kern * gm_up[j];
        sp_up += kern * gp_up[j];
      }
      const Complex F_low = em_low * sm_low + ep_low * sp_low;
      const Complex F_up = em_up * sm_up + ep_up * sp_up;
      // environment-vacuum piece
      Complex v = env_pref * base * (F_low - F_up);
      // medium-vacuum piece, carried by the switch value at retarded time
      const double Gret = profile_value(G, t - uy[yi]);
      if (Gret != 0.0) {
        Complex band_sum;
        if (!swapped) {
          band_sum = Complex(0.0, base) * (std::polar(1.0, wm * uy[yi]) -
                                           std::polar(1.0, wp * uy[yi]));
        } else {
          band_sum = Complex(0.0, -base) * (std::polar(1.0, -wm * uy[yi]) -
                                            std::polar(1.0, -wp * uy[yi]));
        }
        v += (0.5 * Gret / kPi) * band_sum;
      }
      V[yi][ki] = wk * v;
    }
  });

  // assemble: map(dx, y) = sum_k cos(k dx) V[y][k]
  m.value.assign(m.y.size(), std::vector<Complex>(m.dx.size()));
  std::vector<std::size_t> udx_of(m.dx.size());
  std::vector<double> udx;
  for (std::size_t i = 0; i < m.dx.size(); ++i) {
    const double a = std::abs(m.dx[i]);
    std::size_t j = 0;
    for (; j < udx.size(); ++j) {
      if (std::abs(udx[j] - a) < 1e-12 * (1.0 + a)) break;
    }
    if (j == udx.size()) udx.push_back(a);
    udx_of[i] = j;
  }
  std::vector<std::vector<Complex>> quad(ny, std::vector<Complex>(udx.size()));
  parallel_for(ny, threads, [&](std::size_t yi) {
    for (std::size_t xi = 0; xi < udx.size(); ++xi) {
      Complex acc(0, 0);
      for (std::size_t ki = 0; ki < nk; ++ki) {
        acc += std::cos(rules.k_rule.nodes[ki] * udx[xi]) * V[yi][ki];
      }
      quad[yi][xi] = acc;
    }
  });
  for (std::size_t i = 0; i < m.y.size(); ++i) {
    for (std::size_t j = 0; j < m.dx.size(); ++j) {
      m.value[i][j] = quad[row_of[i]][udx_of[j]];
    }
  }
  return m;
}

namespace {

// Vacuum moments pairing one polariton-sector operator with one
// environment-sector operator. The sectors are independent at the initial
// time, so every such moment vanishes; the O(G) autocorrelation pieces
// below inherit exact zeros from these factors.
double cross_sector_moment() { return 0.0; }

}  // namespace

CorrelationMap auto_correlation_first_order(const MediumParams& p,
                                            const SwitchingProfile& G,
                                            double t,
                                            const CorrelationGrid& grid,
                                            FieldPair pair) {
  if (pair == FieldPair::phi_a) {
    throw Error(ErrorCode::NonFinite,
                "use cross_correlation_map for the Phi-A correlator");
  }
  CorrelationMap m;
  m.t = t;
  m.dx = symmetric_grid(grid.dx_max, grid.n_dx);
  m.y = symmetric_grid(grid.y_max, grid.n_y);
  m.pair = pair;

  // O(G) piece of <A A>: <A0 A1> + <A1 A0>. A1 lives in the environment
  // sector, A0 in the polariton sector; each contraction carries a
  // cross-sector moment. Same structure for <Phi Phi> with the roles of
  // the sectors exchanged.
  const GaussLegendreRule rule = composite_gauss_legendre(16, 8, 0.0,
                                                          6.0 * p.upper_band_bottom());
  m.k_max = rule.nodes.back();
  m.value.assign(m.y.size(), std::vector<Complex>(m.dx.size()));
  for (std::size_t i = 0; i < m.y.size(); ++i) {
    for (std::size_t j = 0; j < m.dx.size(); ++j) {
      Complex acc(0, 0);
      for (std::size_t ki = 0; ki < rule.nodes.size(); ++ki) {
        const double k = rule.nodes[ki];
        const double rho = band_rho(p, k);
        const Complex kernel =
            rule.weights[ki] * std::cos(k * m.dx[j]) * (p.g / (2.0 * rho)) *
            std::abs(profile_fourier(G, band_frequencies(p, k).first).value);
        acc += kernel * cross_sector_moment();
      }
      m.value[i][j] = acc;
    }
  }
  return m;
}

std::vector<Peak> locate_peaks(const CorrelationMap& m) {
  const std::size_t ny = m.y.size();
  const std::size_t nx = m.dx.size();
  if (ny < 3 || nx < 3) {
    throw Error(ErrorCode::NoPeaksFound, "grid too small for peak search");
  }
  std::vector<double> mags;
  mags.reserve(ny * nx);
  for (const auto& row : m.value)
    for (const auto& v : row) mags.push_back(std::abs(v));
  std::vector<double> sorted = mags;
  std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2,
                   sorted.end());
  const double median = sorted[sorted.size() / 2];
  const double threshold = 5.0 * median;

  auto mag = [&](std::size_t i, std::size_t j) { return mags[i * nx + j]; };

  std::vector<Peak> peaks;
  for (std::size_t i = 1; i + 1 < ny; ++i) {
    for (std::size_t j = 1; j + 1 < nx; ++j) {
      const double c = mag(i, j);
      if (c <= threshold) continue;
      bool is_max = true;
      for (int di = -1; di <= 1 && is_max; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          if (mag(i + di, j + dj) >= c) {
            is_max = false;
            break;
          }
        }
      }
      if (!is_max) continue;
      // quadratic sub-cell refinement along each axis
      auto refine = [](double fm, double f0, double fp) {
        const double den = fm - 2.0 * f0 + fp;
        return den != 0.0 ? 0.5 * (fm - fp) / den : 0.0;
      };
      const double ddx = m.dx.size() > 1 ? m.dx[1] - m.dx[0] : 0.0;
      const double ddy = m.y.size() > 1 ? m.y[1] - m.y[0] : 0.0;
      Peak pk;
      pk.dx = m.dx[j] + ddx * refine(mag(i, j - 1), c, mag(i, j + 1));
      pk.y = m.y[i] + ddy * refine(mag(i - 1, j), c, mag(i + 1, j));
      pk.magnitude = c;
      peaks.push_back(pk);
    }
  }
  if (peaks.empty()) {
    throw Error(ErrorCode::NoPeaksFound,
                "no local maxima above 5x the median magnitude");
  }
  std::sort(peaks.begin(), peaks.end(),
            [](const Peak& a, const Peak& b) { return a.magnitude > b.magnitude; });
  return peaks;
}

}  // namespace qrad
