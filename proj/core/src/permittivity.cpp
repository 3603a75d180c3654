#include "qrad/permittivity.hpp"

#include <cmath>

#include "qrad/errors.hpp"

namespace qrad {

Permittivity permittivity(const MediumParams& p, double G0, double omega) {
  const Complex den(p.omega * p.omega - omega * omega,
                    -0.5 * omega * G0 * G0);
  if (den == Complex(0.0, 0.0)) {
    throw Error(ErrorCode::PoleAtResonance,
                "eps(omega) has a real pole at omega = +-Omega for G0 = 0");
  }
  return {omega, 1.0 + (p.g * p.g) / den};
}

Complex complex_wavenumber(const MediumParams& p, double G0, double omega) {
  const Complex eps = permittivity(p, G0, omega).value;
  Complex root = std::sqrt(eps);
  // principal sqrt has Im >= 0 for Im eps >= 0, but enforce the decaying
  // branch explicitly for the Im eps < 0 half (omega < 0 inputs)
  if (root.imag() < 0.0) root = -root;
  return omega * root;
}

}  // namespace qrad
