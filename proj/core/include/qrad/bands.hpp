#ifndef QRAD_BANDS_HPP
#define QRAD_BANDS_HPP

#include <utility>
#include <vector>

#include "qrad/medium.hpp"
#include "qrad/types.hpp"

namespace qrad {

// Polariton band structure of the lossless medium (G = 0). The two bands
//   omega_pm(k)^2 = [(k^2 + Omega^2 + g^2) +- rho(k)] / 2
// are the non-negative roots of the quartic
//   (Omega^2 - w^2)(k^2 - w^2) = g^2 w^2.

/// sigma(k) = k^2 - g^2 - Omega^2
double band_sigma(const MediumParams& p, double k);

/// rho(k) = sqrt(4 k^2 g^2 + sigma(k)^2) = omega_+^2 - omega_-^2
double band_rho(const MediumParams& p, double k);

/// (omega_minus, omega_plus) at wavenumber k.
std::pair<double, double> band_frequencies(const MediumParams& p, double k);

double band_frequency(const MediumParams& p, double k, Band b);

/// Sampled dispersion with the helper functions, as emitted by the CLI.
struct BandDispersion {
  std::vector<double> k;
  std::vector<double> omega_minus;
  std::vector<double> omega_plus;
  std::vector<double> rho;
  std::vector<double> sigma;
};

BandDispersion sample_bands(const MediumParams& p,
                            const std::vector<double>& k_grid);

}  // namespace qrad

#endif  // QRAD_BANDS_HPP
