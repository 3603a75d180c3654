#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qrad/errors.hpp"
#include "qrad/integrator.hpp"

using namespace qrad;

namespace {

// y0' = y1, y1' = -y0 (unit oscillator, exact solution cos/sin)
void oscillator(double, const State4& y, State4& dydt) {
  dydt[0] = y[1];
  dydt[1] = -y[0];
  dydt[2] = {0.0, 0.0};
  dydt[3] = {0.0, 0.0};
}

double oscillator_error(double h) {
  State4 y{Complex(1.0, 0.0), Complex(0.0, 0.0), {}, {}};
  IntegratorOptions opt;
  opt.fixed_step = h;
  const double T = 2.0 * std::numbers::pi;
  integrate_dp54(oscillator, y, 0.0, T, opt);
  return std::abs(y[0] - 1.0) + std::abs(y[1]);
}

}  // namespace

TEST_CASE("fixed-step convergence at the nominal fifth order") {
  const double e1 = oscillator_error(0.1);
  const double e2 = oscillator_error(0.05);
  const double ratio = e1 / e2;
  CHECK(ratio > 20.0);
  CHECK(ratio < 45.0);
}

TEST_CASE("adaptive accuracy follows the tolerance") {
  double prev = 1.0;
  for (double tol : {1e-6, 1e-8, 1e-10}) {
    State4 y{Complex(1.0, 0.0), Complex(0.0, 0.0), {}, {}};
    IntegratorOptions opt;
    opt.rel_tol = tol;
    opt.abs_tol = tol * 1e-2;
    integrate_dp54(oscillator, y, 0.0, 20.0 * std::numbers::pi, opt);
    const double err =
        std::abs(y[0] - std::cos(20.0 * std::numbers::pi)) + std::abs(y[1]);
    CHECK(err < 1e3 * tol);
    CHECK(err < prev * 1.5);
    prev = err;
  }
}

TEST_CASE("observer sees monotone accepted steps and the exact endpoint") {
  State4 y{Complex(0.0, 1.0), {}, {}, {}};
  double last_t = 0.0;
  std::size_t calls = 0;
  integrate_dp54(
      [](double, const State4& s, State4& d) {
        d[0] = Complex(0.0, -1.0) * s[0];
        d[1] = d[2] = d[3] = {0.0, 0.0};
      },
      y, 0.0, 5.0, {},
      [&](double t, const State4&) {
        CHECK(t > last_t);
        last_t = t;
        ++calls;
      });
  CHECK(last_t == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(calls > 10);
  // e^{-i t} phase evolution of the initial value i
  CHECK(std::abs(y[0] - Complex(0.0, 1.0) * std::polar(1.0, -5.0)) < 1e-8);
}

TEST_CASE("sampled integration lands on requested times") {
  State4 y{Complex(1.0, 0.0), {}, {}, {}};
  std::vector<double> times = {0.5, 1.0, 2.0, 3.0};
  std::vector<State4> states;
  integrate_dp54_sampled(
      [](double, const State4& s, State4& d) {
        d[0] = -s[0];
        d[1] = d[2] = d[3] = {0.0, 0.0};
      },
      y, 0.0, 3.0, times, states);
  REQUIRE(states.size() == 4);
  for (std::size_t i = 0; i < times.size(); ++i) {
    CHECK(std::abs(states[i][0] - std::exp(-times[i])) < 1e-9);
  }
}

TEST_CASE("non-finite states are detected") {
  State4 y{Complex(1.0, 0.0), {}, {}, {}};
  CHECK_THROWS_AS(
      integrate_dp54(
          [](double t, const State4& s, State4& d) {
            d[0] = s[0] / (1.0 - t);  // finite-time blow-up at t = 1
            d[1] = d[2] = d[3] = {0.0, 0.0};
          },
          y, 0.0, 2.0),
      Error);
}
