#include <doctest.h>

#include <cmath>

#include "qrad/bands.hpp"

using namespace qrad;

TEST_CASE("band intercepts at k = 0") {
  const MediumParams p{1.0, 5.0 / 6.0};
  const auto [wm, wp] = band_frequencies(p, 0.0);
  CHECK(wm == 0.0);
  CHECK(wp == doctest::Approx(std::sqrt(61.0) / 6.0).epsilon(1e-12));
  CHECK(wp == doctest::Approx(p.upper_band_bottom()).epsilon(1e-14));
}

TEST_CASE("decoupled limit g = 0") {
  const MediumParams p{1.0, 0.0};
  const auto [wm, wp] = band_frequencies(p, 2.0);
  CHECK(wm == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(wp == doctest::Approx(2.0).epsilon(1e-14));
  const auto [wm2, wp2] = band_frequencies(p, 0.3);
  CHECK(wm2 == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(wp2 == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("asymptotics: medium resonance below, light cone above") {
  const MediumParams p{1.0, 5.0 / 6.0};
  const auto [wm, wp] = band_frequencies(p, 50.0);
  CHECK(std::abs(wm - p.omega) / p.omega < 1e-3);
  CHECK(std::abs(wp - 50.0) / 50.0 < 1e-3);
}

TEST_CASE("ordering, gap and the quartic-root oracle on a wide grid") {
  const MediumParams p{1.0, 1.5};
  const double n = p.refractive_index();
  double sup_lower = 0.0;
  for (int i = 0; i <= 400; ++i) {
    const double k = 0.05 * i;
    const auto [wm, wp] = band_frequencies(p, k);
    CHECK(wm <= wp);
    CHECK(wm < p.omega + 1e-12);
    CHECK(wp >= n * p.omega - 1e-12);
    sup_lower = std::max(sup_lower, wm);

    // independent root property: both omega_pm^2 solve
    // (Omega^2 - w^2)(k^2 - w^2) = g^2 w^2
    for (double w : {wm, wp}) {
      const double w2 = w * w;
      const double resid =
          (p.omega * p.omega - w2) * (k * k - w2) - p.g * p.g * w2;
      const double scale = std::max({1.0, k * k * k * k, w2 * w2});
      CHECK(std::abs(resid) < 1e-11 * scale);
    }
  }
  // gap between sup omega_- and inf omega_+ is (n-1) Omega
  const double gap = band_frequencies(p, 0.0).second - p.omega;
  CHECK(gap == doctest::Approx((n - 1.0) * p.omega).epsilon(1e-13));
  CHECK(sup_lower < p.omega);
}

TEST_CASE("rho and sigma helpers") {
  const MediumParams p{1.0, 1.5};
  for (double k : {0.0, 0.3, 1.0, 4.0}) {
    const double sig = band_sigma(p, k);
    const double rho = band_rho(p, k);
    CHECK(sig == doctest::Approx(k * k - p.g * p.g - 1.0).epsilon(1e-14));
    CHECK(rho * rho ==
          doctest::Approx(4.0 * k * k * p.g * p.g + sig * sig).epsilon(1e-13));
    // rho = omega_+^2 - omega_-^2
    const auto [wm, wp] = band_frequencies(p, k);
    CHECK(rho == doctest::Approx(wp * wp - wm * wm).epsilon(1e-12));
  }
}

TEST_CASE("lower band is linear with slope 1/n at small k") {
  const MediumParams p{1.0, 1.5};
  const double n = p.refractive_index();
  const double k = 1e-4;
  CHECK(band_frequencies(p, k).first ==
        doctest::Approx(k / n).epsilon(1e-7));
}
