#ifndef QRAD_MEDIUM_HPP
#define QRAD_MEDIUM_HPP

namespace qrad {

/// Static parameters of the dispersive medium (units with c = hbar = 1):
/// a continuum of polarization oscillators with resonance frequency omega,
/// coupled to the electromagnetic field with strength g.
struct MediumParams {
  double omega = 1.0;  // medium resonance frequency, > 0
  double g = 0.0;      // EM-medium coupling, >= 0

  /// Low-frequency refractive index n = sqrt(1 + g^2/Omega^2).
  double refractive_index() const;

  /// nOmega = sqrt(Omega^2 + g^2), the upper-band frequency at k = 0.
  double upper_band_bottom() const;
};

/// Validates physicality (omega > 0, g >= 0, finite) and returns the
/// parameters unchanged. Throws Error with NonPositiveOmega,
/// NegativeCoupling or NonFinite.
MediumParams validate_params(const MediumParams& p);

/// Intrinsic damping data for a constant medium-environment coupling G0.
struct DampingInfo {
  double gamma = 0.0;  // oscillator damping Gamma = G0^2/4
  // low-frequency slope of Im sqrt(eps): Gamma (n^2-1)/(n Omega^2)
  double im_sqrt_eps_slope = 0.0;
};

DampingInfo damping_info(const MediumParams& p, double G0);

/// Lorentzian refractive-index perturbation Delta n(t) of width tau on a
/// background index n, for comparison against coupling-switch radiation.
struct DeltaNPulse {
  double delta_n = 0.0;
  double tau = 1.0;
  double n = 1.0;
};

}  // namespace qrad

#endif  // QRAD_MEDIUM_HPP
