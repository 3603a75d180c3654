#ifndef QRAD_SPECTRUM_HPP
#define QRAD_SPECTRUM_HPP

#include <vector>

#include "qrad/first_order.hpp"
#include "qrad/medium.hpp"
#include "qrad/profile.hpp"
#include "qrad/quadrature.hpp"

namespace qrad {

/// Environment-momentum quadrature: integrate over kappa in [-Lambda, Lambda]
/// (evaluated as 2x the positive half by symmetry of the drive).
struct KappaQuadrature {
  double lambda = 0.0;  // cutoff; 0 -> 40 / (characteristic profile width)
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
};

struct SpectrumResult {
  std::vector<double> k;
  std::vector<double> n_minus;
  std::vector<double> n_plus;
  std::vector<double> err_minus;  // quadrature error estimates
  std::vector<double> err_plus;
  double kappa_cutoff = 0.0;
  // set only when doubling Lambda and tightening the tolerance moves no
  // point by more than 0.1% (and every quadrature converged)
  bool converged = false;
};

/// Created-particle density per mode, n_pm(k) = Integral dkappa |beta|^2,
/// both bands on the given k grid. Fat-tailed profiles (Step) come back
/// with converged = false and cutoff-tagged values rather than an error.
SpectrumResult spectrum_first_order(const MediumParams& p,
                                    const SwitchingProfile& G,
                                    const std::vector<double>& k_grid,
                                    const KappaQuadrature& quad = {});

struct YieldOptions {
  bool linearize_lower_band = true;  // use w_-(k) ~ |k|/n in the integrand
  double k_cutoff = 0.0;             // required when linearization is off
};

struct YieldResult {
  double N_over_l = 0.0;
  double k_cutoff = 0.0;
  bool linearized = true;
  bool converged = true;
  bool asymptotic_regime = true;  // false when Omega tau < 5
};

/// Lower-band particles per unit length, N/l = Integral dk/(2 pi) n_-(k),
/// by double quadrature (kappa inside k). Without linearization the large-k
/// tail of n_-(k) is constant and the integral diverges: throws
/// DivergentYield unless an explicit k_cutoff is supplied.
YieldResult total_yield(const MediumParams& p, const SwitchingProfile& G,
                        const YieldOptions& opt = {},
                        const KappaQuadrature& quad = {});

/// Closed form for the Lorentz pulse in the slow-switching regime:
/// N/l = Gamma0 / (Omega tau)^2 * (n^2 - 1) / (8 n), Gamma0 = G0^2/4.
YieldResult lorentzian_yield_closed_form(const MediumParams& p, double G0,
                                         double tau);

/// Comparator: radiation from a Lorentzian refractive-index perturbation,
/// N/l = (pi/16) (Delta n)^2 / (n tau).
YieldResult delta_n_yield_closed_form(const DeltaNPulse& pulse);

/// n(k; Lambda) for a family of kappa cutoffs.
struct CutoffScan {
  std::vector<double> lambda;
  std::vector<double> n;
  bool monotone = false;
  // relative increase per cutoff doubling, normalized per octave, between
  // consecutive grid points
  std::vector<double> rel_increase_per_doubling;
  double loglog_slope_top_decade = 0.0;
  // d n / d log2(Lambda) over the top decade; constant > 0 for the
  // logarithmically divergent step-profile integrand
  double dn_dlog2_top_decade = 0.0;
};

/// Generic cutoff scan for any profile (used to contrast converging smooth
/// profiles with the divergent step).
CutoffScan cutoff_scan(const MediumParams& p, const SwitchingProfile& G,
                       double k, Band band,
                       const std::vector<double>& lambdas);

/// Step-profile scan G(t) = G0 Theta(-t): the kappa integral carries a UV
/// divergence, so n(k; Lambda) must grow without plateau.
CutoffScan sudden_switch_cutoff_scan(const MediumParams& p, double G0,
                                     double k, Band band,
                                     const std::vector<double>& lambdas);

}  // namespace qrad

#endif  // QRAD_SPECTRUM_HPP
