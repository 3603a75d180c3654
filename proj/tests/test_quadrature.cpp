#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qrad/quadrature.hpp"

using namespace qrad;

TEST_CASE("polynomials and smooth integrands") {
  QuadratureOptions opt;
  opt.rel_tol = 1e-12;
  const auto r1 = integrate_gk([](double x) { return x * x; }, 0.0, 1.0, opt);
  CHECK(r1.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(r1.converged);

  const auto r2 =
      integrate_gk([](double x) { return std::exp(-x * x); }, -8.0, 8.0, opt);
  CHECK(r2.value == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-12));
}

TEST_CASE("oscillatory integrand") {
  QuadratureOptions opt;
  opt.rel_tol = 1e-11;
  opt.abs_tol = 1e-13;
  const auto r = integrate_gk([](double x) { return std::sin(40.0 * x); }, 0.0,
                              std::numbers::pi, opt);
  // Integral sin(40 x) over [0, pi] = (1 - cos(40 pi))/40 = 0
  CHECK(std::abs(r.value) < 1e-12);
}

TEST_CASE("integrable endpoint singularity") {
  QuadratureOptions opt;
  opt.rel_tol = 1e-8;
  opt.max_intervals = 20000;
  const auto r =
      integrate_gk([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, opt);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-5));
}

TEST_CASE("kappa-integral oracle: exponential tail") {
  // Integral over kappa in R of |kappa| e^{-2 tau (w + |kappa|)}
  //   = e^{-2 tau w} / (2 tau^2)
  QuadratureOptions opt;
  opt.rel_tol = 1e-12;
  for (double tau : {2.0, 10.0}) {
    for (double w : {0.05, 0.4}) {
      const auto r = integrate_gk(
          [&](double kap) { return kap * std::exp(-2.0 * tau * (w + kap)); },
          0.0, 40.0 / tau, opt);
      const double closed = std::exp(-2.0 * tau * w) / (2.0 * tau * tau);
      CHECK(2.0 * r.value == doctest::Approx(closed).epsilon(1e-8));
    }
  }
}

TEST_CASE("non-converged flag on a hard budget") {
  QuadratureOptions opt;
  opt.rel_tol = 1e-14;
  opt.max_intervals = 3;
  const auto r = integrate_gk(
      [](double x) { return std::sin(300.0 * x) * std::sin(301.0 * x); }, 0.0,
      20.0, opt);
  CHECK(!r.converged);
}

TEST_CASE("complex integrand shares the subdivision") {
  QuadratureOptions opt;
  opt.rel_tol = 1e-11;
  const auto r = integrate_gk_complex(
      [](double x) { return std::polar(1.0, 3.0 * x); }, 0.0, 1.0, opt);
  const Complex expected = (std::polar(1.0, 3.0) - 1.0) / Complex(0.0, 3.0);
  CHECK(std::abs(r.value - expected) < 1e-12);
}

TEST_CASE("Gauss-Legendre rules") {
  // n-point rule is exact through degree 2n-1
  const GaussLegendreRule r8 = gauss_legendre(8);
  double acc = 0.0;
  for (std::size_t i = 0; i < 8; ++i) {
    acc += r8.weights[i] * std::pow(r8.nodes[i], 14);
  }
  CHECK(acc == doctest::Approx(2.0 / 15.0).epsilon(1e-13));

  double wsum = 0.0;
  for (double w : r8.weights) wsum += w;
  CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));

  const GaussLegendreRule comp = composite_gauss_legendre(8, 16, 0.0, 3.0);
  double osc = 0.0;
  for (std::size_t i = 0; i < comp.nodes.size(); ++i) {
    osc += comp.weights[i] * std::cos(7.0 * comp.nodes[i]);
  }
  CHECK(osc == doctest::Approx(std::sin(21.0) / 7.0).epsilon(1e-12));
}
