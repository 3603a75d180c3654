#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qrad/mode_ode.hpp"
#include "qrad/permittivity.hpp"

using namespace qrad;

namespace {

const MediumParams kMedium{1.0, 1.5};

SwitchingProfile constant_coupling(double G0) {
  // flat window far wider than any test span
  return WindowProfile{G0, -1e7, 1e7, 0.0};
}

}  // namespace

TEST_CASE("free polariton evolves as a pure phase") {
  const double k = 0.8;
  const HopfieldBasis basis = hopfield_diagonalize(kMedium, k);
  SwitchingProfile off = LorentzianProfile{0.0, 1.0};
  for (Band b : kBands) {
    ModeState init = polariton_mode_state(kMedium, basis, b, 0.0);
    init.t = 0.0;
    ModeOdeOptions opt;
    opt.ode.rel_tol = 1e-12;
    opt.ode.abs_tol = 1e-14;
    const double T = 17.0;
    const ModeState fin = evolve_mode(kMedium, off, init, std::nullopt, T, opt);
    const ModeState expect = polariton_mode_state(kMedium, basis, b, T);
    CHECK(std::abs(fin.A - expect.A) < 1e-9);
    CHECK(std::abs(fin.Psi - expect.Psi) < 1e-9);
    CHECK(std::abs(fin.A_dot - expect.A_dot) < 1e-9);
    CHECK(std::abs(fin.Psi_dot - expect.Psi_dot) < 1e-9);
  }
}

TEST_CASE("constant coupling damps the oscillator at Gamma = G0^2/4") {
  // g = 0 decouples the photon; homogeneous Psi decays as e^{-Gamma t}
  const MediumParams p{1.0, 0.0};
  const double G0 = 0.4;  // underdamped: G0^2 = 0.16 << 4 Omega
  const double gamma = 0.25 * G0 * G0;
  ModeState init;
  init.k = 0.5;
  init.Psi = 1.0;
  init.t = 0.0;
  ModeOdeOptions opt;
  opt.ode.rel_tol = 1e-11;
  // compare |Psi| envelopes one period apart to cancel the oscillation
  const double w1 = std::sqrt(1.0 - gamma * gamma);
  const double period = 2.0 * std::numbers::pi / w1;
  const auto traj = integrate_mode_sampled(
      p, constant_coupling(G0), init, std::nullopt,
      {10.0 * period, 14.0 * period}, opt);
  const double measured =
      -std::log(std::abs(traj[1].Psi) / std::abs(traj[0].Psi)) /
      (4.0 * period);
  CHECK(measured == doctest::Approx(gamma).epsilon(0.01));
}

TEST_CASE("mode energy is conserved while the coupling is off") {
  const double k = 1.2;
  const HopfieldBasis basis = hopfield_diagonalize(kMedium, k);
  ModeState init = polariton_mode_state(kMedium, basis, Band::upper, 0.0);
  init.Psi += Complex(0.1, 0.2);  // not an eigenmode
  init.t = 0.0;
  SwitchingProfile off = LorentzianProfile{0.0, 1.0};
  ModeOdeOptions opt;
  opt.ode.rel_tol = 1e-11;
  const double e0 = mode_energy(kMedium, init);
  const ModeState fin = evolve_mode(kMedium, off, init, std::nullopt, 31.0, opt);
  CHECK(mode_energy(kMedium, fin) == doctest::Approx(e0).epsilon(1e-8));
}

TEST_CASE("drive response is linear: superposition of two drives") {
  const double k = 0.4;
  SwitchingProfile G = GaussianProfile{0.2, 5.0};
  ModeOdeOptions opt;
  opt.ode.rel_tol = 1e-11;
  auto run = [&](double kappa) {
    ModeState init;
    init.k = k;
    init.t = -30.0;
    DriveMode d{kappa, DriveMode::Kind::positive_frequency};
    return evolve_mode(kMedium, G, init, d, 30.0, opt);
  };
  // response to the same drive with doubled G0 at small amplitude doubles
  const ModeState r1 = run(0.3);
  SwitchingProfile G2 = GaussianProfile{0.4, 5.0};
  ModeState init;
  init.k = k;
  init.t = -30.0;
  DriveMode d{0.3, DriveMode::Kind::positive_frequency};
  const ModeState r2 = evolve_mode(kMedium, G2, init, d, 30.0, opt);
  CHECK(std::abs(r2.Psi - 2.0 * r1.Psi) < 0.02 * std::abs(r1.Psi) + 1e-12);
  CHECK(std::abs(r2.A - 2.0 * r1.A) < 0.02 * std::abs(r1.A) + 1e-12);
}

TEST_CASE("constant-G transfer function reproduces eps at the drive frequency") {
  // drive the damped medium at frequency w and compare the steady A response
  // with the linear-response prediction: the fourth-order operator acting on
  // e^{-i w t} equals (Omega^2 - i w G^2/2 - w^2)(k^2 - w^2) - g^2 w^2
  //   = (k^2 - w^2 eps(w)) (Omega^2 - i w G^2/2 - w^2) / ... direct check:
  // A_steady = -g (-i w) G phi0_dot-term / L(w). Simpler: evolve long enough
  // under constant G with a drive and compare |A| to the analytic particular
  // solution of the coupled linear system.
  const double G0 = 0.3, k = 0.6, kappa = 0.45;
  const MediumParams p = kMedium;
  DriveMode d{kappa, DriveMode::Kind::positive_frequency};
  const double w = kappa;

  // analytic particular solution with Phi0 = e^{-i w t}/sqrt(4 pi kappa):
  //   Psi-row: (Omega^2 - w^2 - i w G^2/2) Psi = -g A' - G Phi0'
  //   A-row:   (k^2 - w^2) A = g Psi'
  // solving the 2x2 complex system for the e^{-i w t} amplitudes
  const Complex phi_amp = d.amplitude(0.0);  // phase reference at t = 0
  const Complex mpsi(p.omega * p.omega - w * w, -w * G0 * G0 / 2.0);
  const Complex iw(0.0, -w);  // d/dt on e^{-i w t}
  // A = g iw Psi / (k^2 - w^2); substituting into the Psi row leaves
  // denom = (Omega^2 - w^2 - i w G^2/2) - g^2 w^2 / (k^2 - w^2)
  const Complex denom = mpsi + p.g * p.g * iw * iw / (k * k - w * w);
  const Complex psi_amp = -G0 * iw * phi_amp / denom;
  const Complex a_amp = p.g * iw * psi_amp / (k * k - w * w);

  ModeState init;
  init.k = k;
  init.t = 0.0;
  // start on the particular solution and verify it persists (steady state)
  init.Psi = psi_amp;
  init.Psi_dot = iw * psi_amp;
  init.A = a_amp;
  init.A_dot = iw * a_amp;
  ModeOdeOptions opt;
  opt.ode.rel_tol = 1e-11;
  const double T = 40.0;
  const ModeState fin =
      evolve_mode(p, constant_coupling(G0), init, d, T, opt);
  const Complex expect_psi = psi_amp * std::polar(1.0, -w * T);
  const Complex expect_a = a_amp * std::polar(1.0, -w * T);
  CHECK(std::abs(fin.Psi - expect_psi) < 0.01 * std::abs(psi_amp));
  CHECK(std::abs(fin.A - expect_a) < 0.01 * std::abs(a_amp));
}

TEST_CASE("trajectory recording") {
  ModeState init;
  init.k = 0.3;
  init.Psi = 1.0;
  init.t = 0.0;
  const auto traj = integrate_mode(kMedium, SwitchingProfile(LorentzianProfile{0.1, 2.0}),
                                   init, std::nullopt, 5.0, {});
  REQUIRE(traj.size() > 3);
  CHECK(traj.front().t == 0.0);
  CHECK(traj.back().t == doctest::Approx(5.0));
  for (std::size_t i = 1; i < traj.size(); ++i) {
    CHECK(traj[i].t > traj[i - 1].t);
  }
}
