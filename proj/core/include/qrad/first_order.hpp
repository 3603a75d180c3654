#ifndef QRAD_FIRST_ORDER_HPP
#define QRAD_FIRST_ORDER_HPP

#include "qrad/bands.hpp"
#include "qrad/medium.hpp"
#include "qrad/profile.hpp"
#include "qrad/types.hpp"

namespace qrad {

// First order in the switching amplitude, the out-operators of band b mix
// only with the environment continuum:
//   a_b_out(k) = a_b_in(k) + Integral dkappa [ alpha b_{k kappa}
//                                              + beta b^dag_{-k kappa} ].
// The coefficients follow from the retarded solution of the driven
// fourth-order A-equation; with the mode normalizations used here,
//   alpha = s_b i C_b(k) sqrt(|kappa|/2) Gtilde(w_b - |kappa|),
//   beta  = -s_b i C_b(k) sqrt(|kappa|/2) Gtilde(w_b + |kappa|),
// where C_b(k)^2 = (rho -+ sigma) / (4 rho w_b) and s_lower = +1,
// s_upper = -1. Only the moduli are physical; the phases fix this
// project's convention and are cross-checked against the exact solver.

struct FirstOrderCoeffs {
  double k = 0.0;
  double kappa = 0.0;
  Band band = Band::lower;
  Complex alpha;
  Complex beta;
};

/// Spectral weight (rho(k) -+ sigma(k)) / (8 rho(k) w_pm(k)) multiplying
/// |kappa| |Gtilde(w_pm + |kappa|)|^2 in the created-particle density.
double band_weight(const MediumParams& p, double k, Band b);

/// Throws ZeroFrequencyMode when w_band(k) = 0 (k = 0, lower band) or
/// kappa = 0.
FirstOrderCoeffs first_order_coeffs(const MediumParams& p,
                                    const SwitchingProfile& G, double k,
                                    double kappa, Band band);

/// |beta|^2 evaluated from the closed integrand expression
/// weight * |kappa| * |Gtilde(w_b + |kappa|)|^2 — the independent route
/// used by the kappa quadrature.
double beta_sq_integrand(const MediumParams& p, const SwitchingProfile& G,
                         double k, double kappa, Band band);

}  // namespace qrad

#endif  // QRAD_FIRST_ORDER_HPP
