#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qrad/errors.hpp"
#include "qrad/spectrum.hpp"

using namespace qrad;

namespace {
const MediumParams kMedium{1.0, 1.5};  // n = sqrt(3.25)
}

TEST_CASE("zero profile gives an empty spectrum") {
  SwitchingProfile off = LorentzianProfile{0.0, 10.0};
  KappaQuadrature quad;
  const auto r = spectrum_first_order(kMedium, off, {0.0, 0.2, 0.6}, quad);
  for (double v : r.n_minus) CHECK(v == 0.0);
  for (double v : r.n_plus) CHECK(v == 0.0);
  CHECK(r.converged);
}

TEST_CASE("Lorentzian spectrum matches the closed kappa integral") {
  // for the Lorentz pulse the kappa integral has the closed form
  // n_b(k) = weight * G0^2 tau^2 (pi/2) e^{-2 tau w_b} / (2 tau^2)
  const double G0 = 0.1, tau = 10.0;
  SwitchingProfile G = LorentzianProfile{G0, tau};
  KappaQuadrature quad;
  quad.rel_tol = 1e-11;
  const std::vector<double> ks = {0.05, 0.2, 0.5};
  const auto r = spectrum_first_order(kMedium, G, ks, quad);
  CHECK(r.converged);
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const double w = band_frequency(kMedium, ks[i], Band::lower);
    const double closed = band_weight(kMedium, ks[i], Band::lower) * G0 * G0 *
                          (std::numbers::pi / 4.0) * std::exp(-2.0 * tau * w);
    CHECK(r.n_minus[i] == doctest::Approx(closed).epsilon(1e-8));
  }
}

TEST_CASE("upper band is exponentially suppressed for slow switching") {
  SwitchingProfile G = LorentzianProfile{0.1, 10.0};
  KappaQuadrature quad;
  const auto r = spectrum_first_order(kMedium, G, {0.2}, quad);
  CHECK(r.n_plus[0] > 0.0);
  CHECK(r.n_plus[0] / r.n_minus[0] < 1e-10);
}

TEST_CASE("zero mode carries no particles") {
  SwitchingProfile G = LorentzianProfile{0.1, 10.0};
  const auto r = spectrum_first_order(kMedium, G, {0.0}, {});
  CHECK(r.n_minus[0] == 0.0);
  CHECK(r.n_plus[0] > 0.0);  // upper band at k = 0 is massive
}

TEST_CASE("step profile comes back cutoff-tagged, not converged") {
  SwitchingProfile step = StepProfile{0.3};
  KappaQuadrature quad;
  quad.lambda = 50.0;
  const auto r = spectrum_first_order(kMedium, step, {0.4}, quad);
  CHECK(!r.converged);
  CHECK(r.kappa_cutoff == 50.0);
  CHECK(r.n_minus[0] > 0.0);
  // no intrinsic scale: an explicit cutoff is mandatory
  CHECK_THROWS_AS((void)spectrum_first_order(kMedium, step, {0.4}, {}), Error);
}

TEST_CASE("Lorentzian yield closed form, both printed shapes") {
  // reference point: Gamma0/(Omega tau)^2 (n^2-1)/(8n) = 9.7506e-5
  const auto y = lorentzian_yield_closed_form(kMedium, 0.5, 10.0);
  CHECK(y.N_over_l == doctest::Approx(9.7506e-5).epsilon(1e-4));
  // algebraic identity with (1/32) g^2/sqrt(Omega^2+g^2) G0^2/(Omega^3 tau^2)
  const double other = (1.0 / 32.0) * (1.5 * 1.5 / std::sqrt(3.25)) *
                       (0.25 / (1.0 * 100.0));
  CHECK(y.N_over_l == doctest::Approx(other).epsilon(1e-12));
  CHECK(y.asymptotic_regime);
  CHECK(!lorentzian_yield_closed_form(kMedium, 0.5, 3.0).asymptotic_regime);
  CHECK(lorentzian_yield_closed_form({1.0, 0.0}, 0.5, 10.0).N_over_l == 0.0);
}

TEST_CASE("refractive-index comparator") {
  const DeltaNPulse pulse{0.01, 10.0, 1.802776};
  CHECK(delta_n_yield_closed_form(pulse).N_over_l ==
        doctest::Approx(1.0892e-6).epsilon(1e-4));
  DeltaNPulse doubled = pulse;
  doubled.delta_n *= 2.0;
  CHECK(delta_n_yield_closed_form(doubled).N_over_l ==
        doctest::Approx(4.0 * delta_n_yield_closed_form(pulse).N_over_l)
            .epsilon(1e-15));
  DeltaNPulse zero = pulse;
  zero.delta_n = 0.0;
  CHECK(delta_n_yield_closed_form(zero).N_over_l == 0.0);
}

TEST_CASE("double-quadrature yield: C0 against the closed form") {
  // the dk/(2 pi) measure fixes C0 = 1/2 up to O((Omega tau)^-2) terms
  SwitchingProfile G = LorentzianProfile{0.5, 10.0};
  const auto quad_yield = total_yield(kMedium, G, {}, {});
  const auto closed = lorentzian_yield_closed_form(kMedium, 0.5, 10.0);
  const double C0 = quad_yield.N_over_l / closed.N_over_l;
  CHECK(quad_yield.converged);
  CHECK(C0 == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("yield scaling exponents in G0 and tau") {
  auto yield = [&](double g0, double tau) {
    return total_yield(kMedium, SwitchingProfile(LorentzianProfile{g0, tau}),
                       {}, {})
        .N_over_l;
  };
  const double base = yield(0.5, 10.0);
  CHECK(yield(1.0, 10.0) / base == doctest::Approx(4.0).epsilon(1e-6));
  CHECK(yield(0.5, 20.0) / base == doctest::Approx(0.25).epsilon(5e-3));
}

TEST_CASE("divergent yield without linearization") {
  SwitchingProfile G = LorentzianProfile{0.5, 10.0};
  YieldOptions opt;
  opt.linearize_lower_band = false;
  CHECK_THROWS_AS((void)total_yield(kMedium, G, opt, {}), Error);
  // with an explicit k cutoff the integral is finite again
  opt.k_cutoff = 2.0;
  const auto y = total_yield(kMedium, G, opt, {});
  CHECK(y.N_over_l > 0.0);
  CHECK(!y.linearized);
}

TEST_CASE("sudden switch scan: log-divergent, monotone, no plateau") {
  const double k = 0.4;
  std::vector<double> lambdas;
  for (int i = 0; i <= 8; ++i) lambdas.push_back(4.0 * std::pow(10.0, i / 4.0));
  const auto scan = sudden_switch_cutoff_scan(kMedium, 0.3, k, Band::lower,
                                              lambdas);
  CHECK(scan.monotone);
  for (double r : scan.rel_increase_per_doubling) CHECK(r > 0.0);

  // the step integrand behaves as G0^2/(2 pi kappa) at large kappa, so the
  // increment per doubling approaches weight * G0^2 ln2 / pi: compare the
  // top-decade slope in log2(Lambda) against that closed-form rate
  const double rate = band_weight(kMedium, k, Band::lower) * 0.09 *
                      std::numbers::ln2 / std::numbers::pi;
  CHECK(scan.dn_dlog2_top_decade == doctest::Approx(rate).epsilon(0.02));
  // log-log slope of a logarithmic divergence is small but positive
  CHECK(scan.loglog_slope_top_decade > 0.05);
  CHECK(scan.loglog_slope_top_decade < 0.6);
}

TEST_CASE("smooth profile converges under the same scan") {
  std::vector<double> lambdas;
  for (int i = 0; i <= 8; ++i) lambdas.push_back(0.5 * std::pow(10.0, i / 4.0));
  const auto scan = cutoff_scan(kMedium, SwitchingProfile(LorentzianProfile{0.3, 10.0}),
                                0.4, Band::lower, lambdas);
  // relative change per doubling collapses once the exponential tail is in
  CHECK(scan.rel_increase_per_doubling.back() < 1e-4);
}
