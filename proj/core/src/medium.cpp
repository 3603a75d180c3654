#include "qrad/medium.hpp"

#include <cmath>

#include "qrad/errors.hpp"

namespace qrad {

double MediumParams::refractive_index() const {
  return std::sqrt(1.0 + (g * g) / (omega * omega));
}

double MediumParams::upper_band_bottom() const {
  return std::hypot(omega, g);
}

MediumParams validate_params(const MediumParams& p) {
  if (!std::isfinite(p.omega) || !std::isfinite(p.g)) {
    throw Error(ErrorCode::NonFinite, "medium parameters must be finite");
  }
  if (p.omega <= 0.0) {
    throw Error(ErrorCode::NonPositiveOmega, "resonance frequency must be > 0");
  }
  if (p.g < 0.0) {
    throw Error(ErrorCode::NegativeCoupling, "EM-medium coupling must be >= 0");
  }
  return p;
}

DampingInfo damping_info(const MediumParams& p, double G0) {
  if (!std::isfinite(G0)) {
    throw Error(ErrorCode::NonFinite, "coupling must be finite");
  }
  if (G0 < 0.0) {
    throw Error(ErrorCode::NegativeCoupling, "environment coupling must be >= 0");
  }
  DampingInfo d;
  d.gamma = 0.25 * G0 * G0;
  const double n = p.refractive_index();
  d.im_sqrt_eps_slope = d.gamma * (n * n - 1.0) / (n * p.omega * p.omega);
  return d;
}

}  // namespace qrad
