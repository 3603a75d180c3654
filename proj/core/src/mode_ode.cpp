#include "qrad/mode_ode.hpp"

#include <cmath>
#include <numbers>

#include "qrad/errors.hpp"

namespace qrad {

Complex DriveMode::amplitude(double t) const {
  const double ak = std::abs(kappa);
  const double sgn = (kind == Kind::positive_frequency) ? -1.0 : 1.0;
  return std::polar(1.0 / std::sqrt(4.0 * std::numbers::pi * ak),
                    sgn * ak * t);
}

Complex DriveMode::amplitude_dot(double t) const {
  const double ak = std::abs(kappa);
  const double sgn = (kind == Kind::positive_frequency) ? -1.0 : 1.0;
  return Complex(0.0, sgn * ak) * amplitude(t);
}

Vec4c mode_quadratures(const MediumParams& p, const ModeState& s) {
  return {s.A, s.A_dot - p.g * s.Psi, s.Psi, s.Psi_dot};
}

ModeState mode_from_quadratures(const MediumParams& p, double k,
                                const Vec4c& z, double t) {
  ModeState s;
  s.k = k;
  s.A = z[0];
  s.Psi = z[2];
  s.A_dot = z[1] + p.g * z[2];
  s.Psi_dot = z[3];
  s.t = t;
  return s;
}

ModeState polariton_mode_state(const MediumParams& p,
                               const HopfieldBasis& basis, Band b, double t) {
  const int bi = band_index(b);
  Vec4c z = basis.w[bi];
  const Complex phase = std::polar(1.0, -basis.omega[bi] * t);
  for (auto& c : z) c *= phase;
  return mode_from_quadratures(p, basis.k, z, t);
}

double mode_energy(const MediumParams& p, const ModeState& s) {
  return 0.5 * (std::norm(s.A_dot) + s.k * s.k * std::norm(s.A) +
                std::norm(s.Psi_dot) + p.omega * p.omega * std::norm(s.Psi));
}

namespace {

Rhs4 make_rhs(const MediumParams& p, const SwitchingProfile& G, double k,
              const std::optional<DriveMode>& drive,
              bool advanced_elimination) {
  const double k2 = k * k;
  const double om2 = p.omega * p.omega;
  const double g = p.g;
  const double damp_sign = advanced_elimination ? -1.0 : 1.0;
  // state layout: y = (A, A', Psi, Psi')
  return [=, &G](double t, const State4& y, State4& dydt) {
    const double Gt = profile_value(G, t);
    const double Gdot = profile_derivative(G, t);
    dydt[0] = y[1];
    dydt[1] = -k2 * y[0] + g * y[3];
    dydt[2] = y[3];
    Complex acc = -om2 * y[2] - g * y[1] -
                  damp_sign * 0.5 * Gt * (Gdot * y[2] + Gt * y[3]);
    if (drive) acc -= Gt * drive->amplitude_dot(t);
    dydt[3] = acc;
  };
}

State4 pack(const ModeState& s) { return {s.A, s.A_dot, s.Psi, s.Psi_dot}; }

ModeState unpack(double k, const State4& y, double t) {
  return {k, y[0], y[1], y[2], y[3], t};
}

}  // namespace

ModeState evolve_mode(const MediumParams& p, const SwitchingProfile& G,
                      const ModeState& initial,
                      const std::optional<DriveMode>& drive, double t1,
                      const ModeOdeOptions& opt) {
  auto rhs = make_rhs(p, G, initial.k, drive, opt.advanced_elimination);
  State4 y = pack(initial);
  integrate_dp54(rhs, y, initial.t, t1, opt.ode);
  return unpack(initial.k, y, t1);
}

std::vector<ModeState> integrate_mode(const MediumParams& p,
                                      const SwitchingProfile& G,
                                      const ModeState& initial,
                                      const std::optional<DriveMode>& drive,
                                      double t1, const ModeOdeOptions& opt) {
  auto rhs = make_rhs(p, G, initial.k, drive, opt.advanced_elimination);
  State4 y = pack(initial);
  std::vector<ModeState> traj;
  traj.push_back(initial);
  integrate_dp54(rhs, y, initial.t, t1, opt.ode,
                 [&](double t, const State4& s) {
                   traj.push_back(unpack(initial.k, s, t));
                 });
  return traj;
}

std::vector<ModeState> integrate_mode_sampled(
    const MediumParams& p, const SwitchingProfile& G, const ModeState& initial,
    const std::optional<DriveMode>& drive, const std::vector<double>& times,
    const ModeOdeOptions& opt) {
  auto rhs = make_rhs(p, G, initial.k, drive, opt.advanced_elimination);
  State4 y = pack(initial);
  std::vector<State4> states;
  const double t1 = times.empty() ? initial.t : times.back();
  integrate_dp54_sampled(rhs, y, initial.t, t1, times, states, opt.ode);
  std::vector<ModeState> traj;
  traj.reserve(states.size());
  for (size_t i = 0; i < states.size(); ++i) {
    traj.push_back(unpack(initial.k, states[i], times[i]));
  }
  return traj;
}

}  // namespace qrad
