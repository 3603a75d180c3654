#include "qrad/first_order.hpp"

#include <cmath>

#include "qrad/errors.hpp"

namespace qrad {

double band_weight(const MediumParams& p, double k, Band b) {
  const double rho = band_rho(p, k);
  const double sig = band_sigma(p, k);
  const double w = band_frequency(p, k, b);
  const double num = (b == Band::lower) ? rho + sig : rho - sig;
  return num / (8.0 * rho * w);
}

FirstOrderCoeffs first_order_coeffs(const MediumParams& p,
                                    const SwitchingProfile& G, double k,
                                    double kappa, Band band) {
  const double wb = band_frequency(p, k, band);
  if (wb <= 0.0) {
    throw Error(ErrorCode::ZeroFrequencyMode,
                "first-order coefficients undefined for a zero-frequency mode");
  }
  if (kappa == 0.0) {
    throw Error(ErrorCode::ZeroFrequencyMode,
                "environment mode kappa must be nonzero");
  }
  const double rho = band_rho(p, k);
  const double sig = band_sigma(p, k);
  const double num = (band == Band::lower) ? rho + sig : rho - sig;
  const double C = std::sqrt(num / (4.0 * rho * wb));
  const double s = (band == Band::lower) ? 1.0 : -1.0;
  const double amp = s * C * std::sqrt(std::abs(kappa) / 2.0);

  FirstOrderCoeffs c;
  c.k = k;
  c.kappa = kappa;
  c.band = band;
  c.alpha = Complex(0.0, amp) * profile_fourier(G, wb - std::abs(kappa)).value;
  c.beta = Complex(0.0, -amp) * profile_fourier(G, wb + std::abs(kappa)).value;
  return c;
}

double beta_sq_integrand(const MediumParams& p, const SwitchingProfile& G,
                         double k, double kappa, Band band) {
  const double wb = band_frequency(p, k, band);
  const double gt = std::abs(profile_fourier(G, wb + std::abs(kappa)).value);
  return band_weight(p, k, band) * std::abs(kappa) * gt * gt;
}

}  // namespace qrad
