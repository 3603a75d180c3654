#ifndef QRAD_MODE_ODE_HPP
#define QRAD_MODE_ODE_HPP

#include <optional>
#include <vector>

#include "qrad/hopfield.hpp"
#include "qrad/integrator.hpp"
#include "qrad/medium.hpp"
#include "qrad/profile.hpp"
#include "qrad/types.hpp"

namespace qrad {

// Per-k dynamics with the environment eliminated exactly through the
// retarded solution Phi(t, y=0) = Phi0(t) + G(t) Psi(t) / 2:
//   A''   = -k^2 A + g Psi'
//   Psi'' = -Omega^2 Psi - g A' - (G/2) d/dt(G Psi) - G(t) dPhi0/dt.
// No Markov approximation is involved; the local damping term is exact
// for this geometry.

struct ModeState {
  double k = 0.0;
  Complex A, A_dot, Psi, Psi_dot;
  double t = 0.0;
};

/// Environment drive: the k-mode of the free incoming field at y = 0,
///   Phi0_k(t) = exp(-/+ i |kappa| t) / sqrt(4 pi |kappa|),
/// the 1/sqrt(2 pi) stemming from the transverse mode measure and the
/// 1/sqrt(2|kappa|) from the oscillator normalization.
struct DriveMode {
  enum class Kind { positive_frequency, negative_frequency };
  double kappa = 0.0;
  Kind kind = Kind::positive_frequency;

  Complex amplitude(double t) const;
  Complex amplitude_dot(double t) const;
};

struct ModeOdeOptions {
  IntegratorOptions ode;
  // flips the sign of the local damping term (advanced instead of retarded
  // elimination); exists only as a falsifiability control
  bool advanced_elimination = false;
};

/// Canonical quadratures z = (A, pi_A, Psi, pi_Psi) with pi_A = A' - g Psi,
/// pi_Psi = Psi'.
Vec4c mode_quadratures(const MediumParams& p, const ModeState& s);
ModeState mode_from_quadratures(const MediumParams& p, double k,
                                const Vec4c& z, double t);

/// Free polariton mode of band b: z(t) = w_b e^{-i w_b t}.
ModeState polariton_mode_state(const MediumParams& p,
                               const HopfieldBasis& basis, Band b, double t);

/// Mode energy 1/2 (|A'|^2 + k^2 |A|^2 + |Psi'|^2 + Omega^2 |Psi|^2);
/// equals the (A, Psi)-sector Hamiltonian and is conserved while G = 0.
double mode_energy(const MediumParams& p, const ModeState& s);

/// Evolves the state to t1 without recording (returns the final state).
ModeState evolve_mode(const MediumParams& p, const SwitchingProfile& G,
                      const ModeState& initial,
                      const std::optional<DriveMode>& drive, double t1,
                      const ModeOdeOptions& opt = {});

/// Adaptive integration over [initial.t, t1] recording every accepted step.
std::vector<ModeState> integrate_mode(const MediumParams& p,
                                      const SwitchingProfile& G,
                                      const ModeState& initial,
                                      const std::optional<DriveMode>& drive,
                                      double t1,
                                      const ModeOdeOptions& opt = {});

/// Integration that lands exactly on the given times (ascending).
std::vector<ModeState> integrate_mode_sampled(
    const MediumParams& p, const SwitchingProfile& G, const ModeState& initial,
    const std::optional<DriveMode>& drive, const std::vector<double>& times,
    const ModeOdeOptions& opt = {});

}  // namespace qrad

#endif  // QRAD_MODE_ODE_HPP
