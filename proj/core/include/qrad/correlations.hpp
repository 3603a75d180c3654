#ifndef QRAD_CORRELATIONS_HPP
#define QRAD_CORRELATIONS_HPP

#include <vector>

#include "qrad/medium.hpp"
#include "qrad/profile.hpp"
#include "qrad/types.hpp"

namespace qrad {

// Equal-time two-point functions in the in-vacuum, to first order in the
// switching amplitude. The cross correlator <Phi(t,x,y) A(t,x')> receives
// two contributions:
//   (medium vacuum)      (G(t-|y|)/2) <Psi0(t-|y|,x) A0(t,x')>,
//   (environment vacuum) <Phi0(t,x,y) A1(t,x')>,
// both of which reduce to one-dimensional mode integrals with the
// band-independent products C_b |w_b^A| = g/(2 rho) and
// w_b^Psi conj(w_b^A) = +-i g/(2 rho). The equal-order pieces of <A A> and
// <Phi Phi> pair operators from independent sectors and vanish identically.

struct CorrelationGrid {
  double dx_max = 1.0;
  double y_max = 1.0;
  std::size_t n_dx = 65;  // symmetric grid including 0 (use odd counts)
  std::size_t n_y = 65;
};

struct CorrelationCutoffs {
  double k_max = 0.0;      // 0 -> 6 n Omega
  double kappa_max = 0.0;  // 0 -> omega_+(k_max) + 30 / t_char
  double points_per_period = 8.0;
};

enum class OperatorOrder { phi_first, a_first };
enum class FieldPair { phi_a, a_a, phi_phi };

struct CorrelationMap {
  double t = 0.0;
  std::vector<double> dx;
  std::vector<double> y;
  std::vector<std::vector<Complex>> value;  // [y][dx]
  double k_max = 0.0;
  double kappa_max = 0.0;
  OperatorOrder order = OperatorOrder::phi_first;
  FieldPair pair = FieldPair::phi_a;
};

/// <Phi(t,x,y) A(t,x')> on the grid (Delta x = x - x', y). Sensible for
/// times long after the switch; grid and cutoffs are caller's choices.
CorrelationMap cross_correlation_map(const MediumParams& p,
                                     const SwitchingProfile& G, double t,
                                     const CorrelationGrid& grid,
                                     const CorrelationCutoffs& cutoffs = {},
                                     OperatorOrder order = OperatorOrder::phi_first,
                                     unsigned threads = 1);

/// The O(G) connected piece of <A A> (pair = a_a) or <Phi Phi>
/// (pair = phi_phi). Every term multiplies a cross-sector vacuum moment,
/// so the assembled map vanishes to rounding; the operation exists to
/// compute that statement rather than assume it.
CorrelationMap auto_correlation_first_order(const MediumParams& p,
                                            const SwitchingProfile& G,
                                            double t,
                                            const CorrelationGrid& grid,
                                            FieldPair pair = FieldPair::a_a);

struct Peak {
  double dx = 0.0;
  double y = 0.0;
  double magnitude = 0.0;
};

/// Local maxima of |value| above 5x the median magnitude, with quadratic
/// sub-cell refinement, sorted by magnitude (descending). Throws
/// NoPeaksFound when nothing clears the threshold.
std::vector<Peak> locate_peaks(const CorrelationMap& m);

}  // namespace qrad

#endif  // QRAD_CORRELATIONS_HPP
