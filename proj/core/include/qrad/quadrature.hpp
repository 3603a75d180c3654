#ifndef QRAD_QUADRATURE_HPP
#define QRAD_QUADRATURE_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <queue>
#include <vector>

#include "qrad/types.hpp"

namespace qrad {

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

struct QuadratureOptions {
  double abs_tol = 0.0;
  double rel_tol = 1e-10;
  std::size_t max_intervals = 2000;
};

/// Globally adaptive Gauss-Kronrod (7,15) rule: repeatedly bisects the
/// interval with the largest error estimate. Integrand must be finite on
/// the open interval; endpoints are never evaluated.
QuadratureResult integrate_gk(const std::function<double(double)>& f,
                              double a, double b,
                              const QuadratureOptions& opt = {});

/// Complex-valued variant (real and imaginary parts share the subdivision).
struct ComplexQuadratureResult {
  Complex value;
  double abs_error = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

ComplexQuadratureResult integrate_gk_complex(
    const std::function<Complex(double)>& f, double a, double b,
    const QuadratureOptions& opt = {});

/// Fixed Gauss-Legendre rule on [-1, 1] (nodes ascending). Deterministic
/// building block for the correlation-map quadratures.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(std::size_t n);

/// Composite nodes/weights for `panels` equal panels of an n-point rule
/// mapped onto [a, b].
GaussLegendreRule composite_gauss_legendre(std::size_t n, std::size_t panels,
                                           double a, double b);

}  // namespace qrad

#endif  // QRAD_QUADRATURE_HPP
