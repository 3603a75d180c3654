#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "qrad/errors.hpp"
#include "qrad/profile.hpp"
#include "qrad/quadrature.hpp"

using namespace qrad;

namespace {

// brute-force transform (2 pi)^(-1/2) Integral G(t) e^{i w t} dt, the
// independent oracle for every closed-form transform below
Complex fourier_by_quadrature(const SwitchingProfile& G, double omega,
                              double a, double b) {
  QuadratureOptions opt;
  opt.rel_tol = 1e-13;
  opt.abs_tol = 1e-15;
  opt.max_intervals = 100000;
  const auto res = integrate_gk_complex(
      [&](double t) {
        return profile_value(G, t) * std::polar(1.0, omega * t);
      },
      a, b, opt);
  return res.value / std::sqrt(2.0 * std::numbers::pi);
}

}  // namespace

TEST_CASE("profile values") {
  SwitchingProfile lor = LorentzianProfile{1.0, 2.0};
  CHECK(profile_value(lor, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(profile_value(lor, 2.0) == doctest::Approx(0.5).epsilon(1e-15));

  SwitchingProfile step = StepProfile{0.5};
  CHECK(profile_value(step, -1.0) == 0.5);
  CHECK(profile_value(step, 1.0) == 0.0);

  SwitchingProfile gauss = GaussianProfile{2.0, 3.0};
  CHECK(profile_value(gauss, 0.0) == doctest::Approx(2.0));
  CHECK(profile_value(gauss, 3.0) == doctest::Approx(2.0 * std::exp(-0.5)));

  SwitchingProfile win = WindowProfile{1.0, -4.0, 4.0, 2.0};
  CHECK(profile_value(win, 0.0) == doctest::Approx(1.0));
  CHECK(profile_value(win, -4.0) == 0.0);
  CHECK(profile_value(win, -3.0) == doctest::Approx(0.5));  // mid-ramp
  CHECK(profile_value(win, 5.0) == 0.0);
}

TEST_CASE("profile derivatives match finite differences") {
  const SwitchingProfile profiles[] = {
      SwitchingProfile(LorentzianProfile{0.7, 2.0}),
      SwitchingProfile(GaussianProfile{0.7, 2.0}),
      SwitchingProfile(WindowProfile{0.7, -3.0, 5.0, 1.5}),
  };
  for (const auto& G : profiles) {
    for (double t : {-2.5, -0.3, 0.0, 1.7, 4.2}) {
      const double h = 1e-6;
      const double fd =
          (profile_value(G, t + h) - profile_value(G, t - h)) / (2.0 * h);
      CHECK(profile_derivative(G, t) == doctest::Approx(fd).epsilon(1e-6));
    }
  }
}

TEST_CASE("Lorentzian transform closed form") {
  SwitchingProfile lor = LorentzianProfile{1.0, 2.0};
  // G0 tau sqrt(pi/2) at omega = 0
  CHECK(profile_fourier(lor, 0.0).value.real() ==
        doctest::Approx(2.506628).epsilon(1e-6));
  CHECK(profile_fourier(lor, 1.0).value.real() ==
        doctest::Approx(0.339234).epsilon(1e-5));
  CHECK(profile_fourier(lor, 1.0).value.imag() == doctest::Approx(0.0));
}

TEST_CASE("closed-form transforms against the quadrature oracle") {
  SUBCASE("gaussian") {
    SwitchingProfile g = GaussianProfile{0.8, 1.5};
    for (double w : {0.0, 0.4, 1.3}) {
      const Complex oracle = fourier_by_quadrature(g, w, -40.0, 40.0);
      const Complex got = profile_fourier(g, w).value;
      CHECK(std::abs(got - oracle) < 1e-9);
    }
  }
  SUBCASE("window with ramps (complex-valued transform)") {
    SwitchingProfile win = WindowProfile{0.6, -2.0, 7.0, 1.5};
    for (double w : {0.0, 0.3, 1.1, 2.7}) {
      const Complex oracle = fourier_by_quadrature(win, w, -2.0, 7.0);
      const Complex got = profile_fourier(win, w).value;
      CHECK(std::abs(got - oracle) < 1e-9);
    }
  }
  SUBCASE("sharp window") {
    SwitchingProfile win = WindowProfile{1.0, -1.0, 1.0, 0.0};
    for (double w : {0.0, 0.9, 3.3}) {
      const Complex oracle = fourier_by_quadrature(win, w, -1.0, 1.0);
      const Complex got = profile_fourier(win, w).value;
      CHECK(std::abs(got - oracle) < 1e-9);
    }
  }
}

TEST_CASE("step transform keeps the principal-value part") {
  SwitchingProfile step = StepProfile{2.0};
  const Complex v = profile_fourier(step, 0.5).value;
  CHECK(v.real() == doctest::Approx(0.0));
  CHECK(v.imag() ==
        doctest::Approx(-2.0 / (std::sqrt(2.0 * std::numbers::pi) * 0.5)));
  CHECK_THROWS_AS((void)profile_fourier(step, 0.0), Error);
}

TEST_CASE("reality: Gtilde(-w) = conj(Gtilde(w))") {
  const SwitchingProfile profiles[] = {
      SwitchingProfile(LorentzianProfile{0.7, 2.0}),
      SwitchingProfile(GaussianProfile{0.7, 2.0}),
      SwitchingProfile(StepProfile{0.7}),
      SwitchingProfile(WindowProfile{0.7, -1.0, 6.0, 2.0}),
  };
  for (const auto& G : profiles) {
    for (double w : {0.17, 0.9, 2.4, 7.7}) {
      const Complex plus = profile_fourier(G, w).value;
      const Complex minus = profile_fourier(G, -w).value;
      CHECK(std::abs(minus - std::conj(plus)) < 1e-13 * (1.0 + std::abs(plus)));
    }
  }
}

TEST_CASE("Parseval for Lorentzian and Gaussian (closed forms both sides)") {
  QuadratureOptions opt;
  opt.rel_tol = 1e-10;
  SUBCASE("lorentzian") {
    SwitchingProfile G = LorentzianProfile{0.9, 2.5};
    const double time_side = std::numbers::pi * 0.81 * 2.5 / 2.0;
    const auto freq = integrate_gk(
        [&](double w) { return std::norm(profile_fourier(G, w).value); },
        -40.0, 40.0, opt);
    CHECK(freq.value == doctest::Approx(time_side).epsilon(1e-6));
  }
  SUBCASE("gaussian") {
    SwitchingProfile G = GaussianProfile{0.9, 2.5};
    const double time_side = 0.81 * 2.5 * std::sqrt(std::numbers::pi);
    const auto freq = integrate_gk(
        [&](double w) { return std::norm(profile_fourier(G, w).value); },
        -40.0, 40.0, opt);
    CHECK(freq.value == doctest::Approx(time_side).epsilon(1e-6));
  }
}

TEST_CASE("transform is exactly linear in the profile amplitude") {
  SwitchingProfile G = GaussianProfile{0.4, 1.7};
  SwitchingProfile G3 = profile_scaled(G, 3.0);
  for (double w : {0.0, 0.6, 2.2}) {
    const Complex a = profile_fourier(G, w).value;
    const Complex b = profile_fourier(G3, w).value;
    CHECK(b == 3.0 * a);  // bitwise: same operations, scaled G0
  }
}

TEST_CASE("sampled profile: dense Lorentzian tabulation matches analytics") {
  // non-uniform grid: fine where the pulse lives, Nyquist-limited tails out
  // to T = 5000 so the truncated tail is below 1e-6 relative at omega = 1
  const double tau = 2.0;
  SampledProfile s;
  const double T_fine = 20.0, h_fine = 0.025, T = 5000.0, h_tail = 0.7;
  for (double t = -T; t < -T_fine; t += h_tail) s.t.push_back(t);
  for (double t = -T_fine; t < T_fine; t += h_fine) s.t.push_back(t);
  for (double t = T_fine; t <= T; t += h_tail) s.t.push_back(t);
  for (double t : s.t) s.value.push_back(tau * tau / (tau * tau + t * t));
  s.finalize();
  SwitchingProfile G = s;

  CHECK(profile_value(G, 0.025) ==
        doctest::Approx(tau * tau / (tau * tau + 0.025 * 0.025)).epsilon(1e-7));
  CHECK(profile_value(G, 2.0 * T) == 0.0);

  const double analytic0 = 2.0 * std::sqrt(std::numbers::pi / 2.0);
  const double analytic1 = analytic0 * std::exp(-tau);
  // at omega = 0 nothing oscillates and the truncated tail (~2 tau^2/T)
  // dominates; at finite omega the tail cancels and 1e-6 relative holds
  CHECK(profile_fourier(G, 0.0).value.real() ==
        doctest::Approx(analytic0).epsilon(2e-3));
  CHECK(profile_fourier(G, 1.0).value.real() ==
        doctest::Approx(analytic1).epsilon(1e-6));
}

TEST_CASE("sampled profile rejects unresolved frequencies") {
  SampledProfile s;
  for (double t = -10.0; t <= 10.0; t += 1.0) {
    s.t.push_back(t);
    s.value.push_back(std::exp(-t * t / 8.0));
  }
  s.finalize();
  SwitchingProfile G = s;
  CHECK_NOTHROW((void)profile_fourier(G, 0.5));
  CHECK_THROWS_AS((void)profile_fourier(G, 3.0), Error);
  try {
    (void)profile_fourier(G, 3.0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnresolvedFrequency);
  }
}

TEST_CASE("sampled profile CSV loading") {
  const char* path = "test_profile_tmp.csv";
  {
    std::ofstream out(path);
    out << "time,value\n";
    for (double t = -5.0; t <= 5.0; t += 0.1) {
      out << t << "," << std::exp(-0.5 * t * t) << "\n";
    }
  }
  const SampledProfile p = load_sampled_profile(path);
  CHECK(p.t.size() == 101);
  SwitchingProfile G = p;
  CHECK(profile_value(G, 0.0) == doctest::Approx(1.0).epsilon(1e-6));
  std::remove(path);

  {
    std::ofstream out(path);
    out << "0,1\n0,2\n";  // non-increasing grid
  }
  CHECK_THROWS_AS((void)load_sampled_profile(path), Error);
  std::remove(path);
  CHECK_THROWS_AS((void)load_sampled_profile("no_such_file.csv"), Error);
}

TEST_CASE("profile validation and support") {
  CHECK_THROWS_AS(validate_profile(LorentzianProfile{-1.0, 2.0}), Error);
  CHECK_THROWS_AS(validate_profile(LorentzianProfile{1.0, 0.0}), Error);
  CHECK_THROWS_AS(validate_profile(WindowProfile{1.0, 2.0, 1.0, 0.0}), Error);
  CHECK_THROWS_AS(validate_profile(WindowProfile{1.0, 0.0, 1.0, 0.6}), Error);
  CHECK_NOTHROW(validate_profile(WindowProfile{1.0, 0.0, 1.0, 0.5}));

  // Lorentzian reaches threshold * G0 at tau sqrt(1/thr - 1)
  SwitchingProfile lor = LorentzianProfile{1.0, 2.0};
  const double T = profile_support_halfwidth(lor, 1e-6);
  CHECK(profile_value(lor, T) == doctest::Approx(1e-6).epsilon(1e-9));
  CHECK(!std::isfinite(profile_support_halfwidth(SwitchingProfile(StepProfile{1.0}), 1e-6)));
  CHECK(profile_switches_off(lor));
  CHECK(!profile_switches_off(SwitchingProfile(StepProfile{1.0})));
}
