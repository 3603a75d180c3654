#ifndef QRAD_BOGOLIUBOV_HPP
#define QRAD_BOGOLIUBOV_HPP

#include <array>
#include <string>
#include <vector>

#include "qrad/mode_ode.hpp"

namespace qrad {

/// Quadrature grid over the positive kappa half-line; integrals over the
/// full line carry an explicit factor 2 since the drive depends on |kappa|
/// only.
struct KappaGrid {
  std::vector<double> nodes;    // ascending, > 0
  std::vector<double> weights;  // for Integral_0^Lambda
  double kappa_min = 0.0;
  double lambda = 0.0;
};

/// Geometrically spaced panels from kappa_min to lambda, Gauss-Legendre
/// nodes inside each panel.
KappaGrid make_kappa_grid(double kappa_min, double lambda,
                          std::size_t panels, std::size_t gl_order = 8);

/// Full out-operator expansion at wavenumber k,
///   a_b_out(k) = sum_b0 [ alpha_self[b][b0] a_b0_in(k)
///                         + beta_self[b][b0] a_b0_in^dag(-k) ]
///              + Integral dkappa [ alpha_env b + beta_env b^dag ].
struct ExactBogoliubov {
  double k = 0.0;
  std::array<std::array<Complex, 2>, 2> alpha_self{};  // [out band][in band]
  std::array<std::array<Complex, 2>, 2> beta_self{};
  std::array<std::vector<Complex>, 2> alpha_env{};  // [out band][kappa node]
  std::array<std::vector<Complex>, 2> beta_env{};
  KappaGrid grid;
  double t_in = 0.0;
  double t_out = 0.0;

  /// Integral over kappa in (-Lambda, Lambda) of |alpha_env|^2 - |beta_env|^2
  /// plus the self-block norm, minus 1; per out band.
  double norm_defect(Band b) const;
};

struct ExtractOptions {
  ModeOdeOptions mode;
  // endpoints of the integration window: |G| <= support_threshold * G0
  double support_threshold = 1e-6;
  unsigned threads = 1;
};

/// Evolves the in-basis (two polariton modes at k, plus one driven solution
/// per kappa node; negative-frequency data follows by conjugation since the
/// mode system has real coefficients) and projects the final quadratures
/// onto the out-polariton basis with the symplectic product.
/// Requires a profile that switches off (no step profiles).
ExactBogoliubov extract_bogoliubov(const MediumParams& p,
                                   const SwitchingProfile& G, double k,
                                   const KappaGrid& grid,
                                   const ExtractOptions& opt = {});

/// Created particles per mode from the in-vacuum,
/// n_b(k) = sum_b0 |beta_self|^2 + Integral dkappa |beta_env|^2.
std::pair<double, double> occupation_exact(const ExactBogoliubov& b);

/// max over out-operators of the Bogoliubov completeness violation.
double unitarity_defect(const ExactBogoliubov& b);

/// JSON round-trip for regression baselines (complex as [re, im]).
std::string to_json_string(const ExactBogoliubov& b);
ExactBogoliubov exact_bogoliubov_from_json(const std::string& text);

}  // namespace qrad

#endif  // QRAD_BOGOLIUBOV_HPP
