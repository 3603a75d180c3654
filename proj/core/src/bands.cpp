#include "qrad/bands.hpp"

#include <cmath>

namespace qrad {

double band_sigma(const MediumParams& p, double k) {
  return k * k - p.g * p.g - p.omega * p.omega;
}

double band_rho(const MediumParams& p, double k) {
  const double s = band_sigma(p, k);
  return std::sqrt(4.0 * k * k * p.g * p.g + s * s);
}

std::pair<double, double> band_frequencies(const MediumParams& p, double k) {
  const double P = k * k + p.omega * p.omega + p.g * p.g;
  const double rho = band_rho(p, k);
  const double wp2 = 0.5 * (P + rho);
  // omega_-^2 = (P - rho)/2 cancels badly at small k; use the exact product
  // omega_-^2 omega_+^2 = k^2 Omega^2 instead.
  const double wm2 = (k * k * p.omega * p.omega) / wp2;
  return {std::sqrt(wm2), std::sqrt(wp2)};
}

double band_frequency(const MediumParams& p, double k, Band b) {
  const auto [wm, wp] = band_frequencies(p, k);
  return b == Band::lower ? wm : wp;
}

BandDispersion sample_bands(const MediumParams& p,
                            const std::vector<double>& k_grid) {
  BandDispersion d;
  d.k = k_grid;
  d.omega_minus.reserve(k_grid.size());
  d.omega_plus.reserve(k_grid.size());
  d.rho.reserve(k_grid.size());
  d.sigma.reserve(k_grid.size());
  for (double k : k_grid) {
    const auto [wm, wp] = band_frequencies(p, k);
    d.omega_minus.push_back(wm);
    d.omega_plus.push_back(wp);
    d.rho.push_back(band_rho(p, k));
    d.sigma.push_back(band_sigma(p, k));
  }
  return d;
}

}  // namespace qrad
