#ifndef QRAD_PROFILE_HPP
#define QRAD_PROFILE_HPP

#include <string>
#include <variant>
#include <vector>

#include "qrad/types.hpp"

namespace qrad {

// Temporal profiles of the medium-environment coupling G(t). All profiles
// are real and causal-free (defined on the whole time axis); the Fourier
// convention is symmetric,
//   Gtilde(omega) = (2 pi)^(-1/2) Integral dt G(t) exp(i omega t),
// chosen so a Lorentz pulse transforms to G0 tau sqrt(pi/2) exp(-tau|omega|).

/// G(t) = G0 tau^2 / (tau^2 + t^2)
struct LorentzianProfile {
  double G0 = 0.0;
  double tau = 1.0;
};

/// G(t) = G0 exp(-t^2 / (2 tau^2))
struct GaussianProfile {
  double G0 = 0.0;
  double tau = 1.0;
};

/// G(t) = G0 Theta(-t): constant coupling switched off suddenly at t = 0.
struct StepProfile {
  double G0 = 0.0;
};

/// Constant coupling G0 on [t_on, t_off] with raised-cosine ramps of
/// duration `ramp` at both edges (ramp = 0 gives a sharp window).
struct WindowProfile {
  double G0 = 0.0;
  double t_on = -1.0;
  double t_off = 1.0;
  double ramp = 0.0;
};

/// Tabulated profile: values on a strictly increasing time grid, natural
/// cubic spline inside the grid, identically zero outside.
struct SampledProfile {
  std::vector<double> t;
  std::vector<double> value;
  // spline second derivatives, filled by finalize()
  std::vector<double> d2;
  bool finalized = false;

  void finalize();  // validates the grid and builds the spline
};

using SwitchingProfile = std::variant<LorentzianProfile, GaussianProfile,
                                      StepProfile, WindowProfile,
                                      SampledProfile>;

/// One sample of the spectral amplitude Gtilde(omega).
struct SpectralAmplitude {
  double omega = 0.0;
  Complex value;
};

/// G(t). Total function: returns 0 outside a Sampled grid and handles all
/// profile kinds for any finite t.
double profile_value(const SwitchingProfile& G, double t);

/// dG/dt, needed by the mode integrator (analytic for closed forms,
/// spline derivative for Sampled).
double profile_derivative(const SwitchingProfile& G, double t);

/// Fourier transform in the convention above. Closed forms for
/// Lorentzian/Gaussian/Step/Window; exact per-segment spline integration
/// for Sampled. The Step transform keeps only the principal-value part
/// -i G0 / (sqrt(2 pi) omega); its delta(omega) part is dropped since all
/// consumers evaluate at strictly positive arguments.
/// Throws UnresolvedFrequency if a Sampled grid has fewer than 8 samples
/// per period at omega.
SpectralAmplitude profile_fourier(const SwitchingProfile& G, double omega);

/// Peak coupling G0 (max |value| for Sampled).
double profile_peak(const SwitchingProfile& G);

/// Smallest T with |G(t)| <= threshold_ratio * G0 for all |t| >= T.
/// Returns +infinity for the step profile.
double profile_support_halfwidth(const SwitchingProfile& G,
                                 double threshold_ratio);

/// True when G vanishes identically outside a finite interval
/// (Window, Sampled) or decays below any threshold (Lorentzian, Gaussian).
bool profile_switches_off(const SwitchingProfile& G);

/// Returns a copy with all values scaled by c (exact linearity helper).
SwitchingProfile profile_scaled(const SwitchingProfile& G, double c);

/// Loads a Sampled profile from a two-column CSV (time,value); a header
/// line is permitted and skipped. Throws IOError on malformed input.
SampledProfile load_sampled_profile(const std::string& path);

/// Validates profile invariants (G0 >= 0, tau > 0 where present, grids
/// strictly increasing and finite). Throws on violation.
void validate_profile(const SwitchingProfile& G);

}  // namespace qrad

#endif  // QRAD_PROFILE_HPP
