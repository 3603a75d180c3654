#ifndef QRAD_PERMITTIVITY_HPP
#define QRAD_PERMITTIVITY_HPP

#include "qrad/medium.hpp"
#include "qrad/types.hpp"

namespace qrad {

struct Permittivity {
  double omega = 0.0;
  Complex value;
};

/// Complex dielectric permittivity for constant environment coupling G0:
///   eps(omega) = 1 + g^2 / (Omega^2 - i omega G0^2/2 - omega^2).
/// Throws PoleAtResonance only in the lossless case G0 = 0 at omega = +-Omega.
Permittivity permittivity(const MediumParams& p, double G0, double omega);

/// k(omega) = omega sqrt(eps(omega)) on the branch with Im sqrt(eps) >= 0,
/// so that exp(i k x) decays in the propagation direction.
Complex complex_wavenumber(const MediumParams& p, double G0, double omega);

}  // namespace qrad

#endif  // QRAD_PERMITTIVITY_HPP
