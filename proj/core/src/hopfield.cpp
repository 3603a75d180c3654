#include "qrad/hopfield.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "qrad/errors.hpp"

namespace qrad {

Mat4 symplectic_form() {
  Mat4 J{};
  J[0][1] = 1.0;
  J[1][0] = -1.0;
  J[2][3] = 1.0;
  J[3][2] = -1.0;
  return J;
}

Mat4 hamiltonian_matrix(const MediumParams& p, double k) {
  Mat4 M{};
  M[0][0] = k * k;
  M[1][1] = 1.0;
  M[1][2] = p.g;
  M[2][1] = p.g;
  M[2][2] = p.omega * p.omega + p.g * p.g;
  M[3][3] = 1.0;
  return M;
}

Mat4 mat_mul(const Mat4& a, const Mat4& b) {
  Mat4 c{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int l = 0; l < 4; ++l) s += a[i][l] * b[l][j];
      c[i][j] = s;
    }
  return c;
}

Mat4 mat_transpose(const Mat4& a) {
  Mat4 c{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c[i][j] = a[j][i];
  return c;
}

double mat_max_abs_diff(const Mat4& a, const Mat4& b) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m = std::max(m, std::abs(a[i][j] - b[i][j]));
  return m;
}

Vec4c mat_apply(const Mat4& a, const Vec4c& v) {
  Vec4c out{};
  for (int i = 0; i < 4; ++i) {
    Complex s(0.0, 0.0);
    for (int j = 0; j < 4; ++j) s += a[i][j] * v[j];
    out[i] = s;
  }
  return out;
}

double symplectic_defect(const Mat4& S) {
  return mat_max_abs_diff(mat_mul(S, mat_mul(symplectic_form(), mat_transpose(S))),
                          symplectic_form());
}

namespace {

// i u^dag J w with the canonical J
Complex symplectic_product(const Vec4c& u, const Vec4c& w) {
  const Complex s = std::conj(u[0]) * w[1] - std::conj(u[1]) * w[0] +
                    std::conj(u[2]) * w[3] - std::conj(u[3]) * w[2];
  return Complex(0.0, 1.0) * s;
}

}  // namespace

Complex HopfieldBasis::positive_frequency_amplitude(const Vec4c& z, double t,
                                                    Band b) const {
  const int i = band_index(b);
  Vec4c u = w[i];
  const Complex phase = std::polar(1.0, -omega[i] * t);
  for (auto& c : u) c *= phase;
  return symplectic_product(u, z);
}

Complex HopfieldBasis::negative_frequency_amplitude(const Vec4c& z, double t,
                                                    Band b) const {
  const int i = band_index(b);
  Vec4c u;
  const Complex phase = std::polar(1.0, omega[i] * t);
  for (int j = 0; j < 4; ++j) u[j] = std::conj(w[i][j]) * phase;
  return -symplectic_product(u, z);
}

HopfieldBasis hopfield_diagonalize(const MediumParams& p, double k) {
  const auto [wm, wp] = band_frequencies(p, k);
  if (wm <= 0.0) {
    throw Error(ErrorCode::DegenerateMode,
                "lower band carries zero frequency at k = 0");
  }
  if (wp - wm < 1e-12 * wp) {
    throw Error(ErrorCode::DegenerateMode, "bands are degenerate at this k");
  }

  const Mat4 M = hamiltonian_matrix(p, k);
  const Mat4 J = symplectic_form();

  Eigen::Matrix4d K;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int l = 0; l < 4; ++l) s += J[i][l] * M[l][j];
      K(i, j) = s;
    }

  Eigen::ComplexEigenSolver<Eigen::Matrix4d> solver(K);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NonFinite, "eigen decomposition of J M failed");
  }

  HopfieldBasis basis;
  basis.k = k;
  basis.omega = {wm, wp};

  Mat4 T{};
  for (int bi = 0; bi < 2; ++bi) {
    const double wb = basis.omega[bi];
    // pick the eigenvector with eigenvalue closest to -i w_b
    int best = -1;
    double best_dist = 1e300;
    for (int j = 0; j < 4; ++j) {
      const auto lam = solver.eigenvalues()(j);
      const double dist = std::abs(lam - std::complex<double>(0.0, -wb));
      if (dist < best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    Eigen::Vector4cd v = solver.eigenvectors().col(best);

    // deterministic gauge: rotate the largest component onto the real axis
    int imax = 0;
    for (int j = 1; j < 4; ++j)
      if (std::abs(v(j)) > std::abs(v(imax))) imax = j;
    v *= std::abs(v(imax)) / v(imax);

    Eigen::Vector4d x = v.real(), y = v.imag();
    // x^T J y < 0 for a positive-energy eigenvector; normalize to
    // t_q^T J t_p = 1
    double xjy = x(0) * y(1) - x(1) * y(0) + x(2) * y(3) - x(3) * y(2);
    if (xjy > 0.0) {
      y = -y;  // conjugate eigenvector was returned
      xjy = -xjy;
    }
    const double c = 1.0 / std::sqrt(-xjy);
    for (int j = 0; j < 4; ++j) {
      T[j][2 * bi] = c * x(j);
      T[j][2 * bi + 1] = -c * y(j);
    }
    for (int j = 0; j < 4; ++j) {
      basis.w[bi][j] = (c / std::sqrt(2.0)) * Complex(x(j), y(j));
    }
  }

  basis.T = T;
  // T symplectic => T^{-1} = -J T^T J
  basis.S = mat_mul(J, mat_mul(mat_transpose(T), J));
  for (auto& row : basis.S)
    for (auto& e : row) e = -e;
  return basis;
}

}  // namespace qrad
