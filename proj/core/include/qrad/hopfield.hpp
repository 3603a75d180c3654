#ifndef QRAD_HOPFIELD_HPP
#define QRAD_HOPFIELD_HPP

#include <array>

#include "qrad/bands.hpp"
#include "qrad/medium.hpp"
#include "qrad/types.hpp"

namespace qrad {

using Mat4 = std::array<std::array<double, 4>, 4>;
using Vec4c = std::array<Complex, 4>;

// Canonical quadrature ordering used throughout: z = (A, pi_A, Psi, pi_Psi)
// with pi_A = dA/dt - g Psi and pi_Psi = dPsi/dt.

/// Canonical symplectic form J for the (q, p) pairing above.
Mat4 symplectic_form();

/// Quadratic-form matrix M(k) of the mode Hamiltonian,
///   H_k = 1/2 z^T M z
///       = 1/2 pi_A^2 + 1/2 k^2 A^2 + 1/2 pi_Psi^2
///         + 1/2 (Omega^2 + g^2) Psi^2 + g Psi pi_A.
Mat4 hamiltonian_matrix(const MediumParams& p, double k);

/// Normal-mode (polariton) basis at wavenumber k.
///
/// S maps canonical quadratures to normal-mode quadratures, z' = S z, with
/// S J S^T = J and S^{-T} M S^{-1} = diag(w-, w-, w+, w+). T = S^{-1};
/// its column pairs are the quadrature shapes of the two bands. The complex
/// mode vectors w[b] = (t_q - i t_p)/sqrt(2) satisfy i w^dag J w = 1, and a
/// free solution decomposes as
///   z(t) = sum_b [ a_b w_b e^{-i w_b t} + abar_b w_b^* e^{+i w_b t} ].
struct HopfieldBasis {
  double k = 0.0;
  std::array<double, 2> omega{};  // (lower, upper)
  Mat4 S{};
  Mat4 T{};
  std::array<Vec4c, 2> w{};

  /// Coefficient a_b of the e^{-i w_b t} mode in the state z at time t:
  /// a_b = i (w_b e^{-i w_b t})^dag J z.
  Complex positive_frequency_amplitude(const Vec4c& z, double t, Band b) const;

  /// Coefficient abar_b of the e^{+i w_b t} conjugate mode:
  /// abar_b = -i (w_b^* e^{+i w_b t})^dag J z.
  Complex negative_frequency_amplitude(const Vec4c& z, double t, Band b) const;
};

/// Symplectic diagonalization of the k-mode Hamiltonian via the spectral
/// decomposition of J M. Throws DegenerateMode for the gapless k = 0 lower
/// band and for the accidental crossing |k| = Omega at g = 0.
HopfieldBasis hopfield_diagonalize(const MediumParams& p, double k);

// small dense-matrix helpers (tests and internal use)
Mat4 mat_mul(const Mat4& a, const Mat4& b);
Mat4 mat_transpose(const Mat4& a);
double mat_max_abs_diff(const Mat4& a, const Mat4& b);
Vec4c mat_apply(const Mat4& a, const Vec4c& v);

/// max-norm of S J S^T - J.
double symplectic_defect(const Mat4& S);

}  // namespace qrad

#endif  // QRAD_HOPFIELD_HPP
