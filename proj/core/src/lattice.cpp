#include "qrad/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "qrad/errors.hpp"

namespace qrad {

namespace {

// flat state layout: [A, A', Psi, Psi', Phi_0..Phi_{M-1}, Pi_0..Pi_{M-1}]
// with M = 2N+1 cells, y_j = (j - N) dy.

struct LatticeSystem {
  const MediumParams& p;
  const SwitchingProfile& G;
  double k;
  const LatticeConfig& cfg;
  const std::optional<DriveMode>& drive;
  int N;       // cells per side
  int M;       // 2N+1
  double dy;
  bool absorbing;

  std::size_t size() const { return 4 + 2 * std::size_t(M); }

  void rhs(double t, const std::vector<Complex>& s,
           std::vector<Complex>& ds) const {
    const double Gt = profile_value(G, t);
    const double Gdot = profile_derivative(G, t);
    const Complex* Phi = s.data() + 4;
    const Complex* Pi = s.data() + 4 + M;
    Complex* dPhi = ds.data() + 4;
    Complex* dPi = ds.data() + 4 + M;

    // medium block; the full field velocity at y=0 is incident + scattered
    Complex phi0_dot = Pi[N];
    if (drive) phi0_dot += drive->amplitude_dot(t);
    ds[0] = s[1];
    ds[1] = -k * k * s[0] + p.g * s[3];
    ds[2] = s[3];
    ds[3] = -p.omega * p.omega * s[2] - p.g * s[1] - Gt * phi0_dot;

    const double inv_dy2 = 1.0 / (dy * dy);
    for (int j = 0; j < M; ++j) {
      dPhi[j] = Pi[j];
      const Complex left = (j > 0) ? Phi[j - 1] : Complex(0.0, 0.0);
      const Complex right = (j + 1 < M) ? Phi[j + 1] : Complex(0.0, 0.0);
      dPi[j] = (left - 2.0 * Phi[j] + right) * inv_dy2;
    }
    // point source d/dt[G Psi] on the y = 0 cell
    dPi[N] += (Gdot * s[2] + Gt * s[3]) / dy;

    if (absorbing) {
      // first-order outgoing characteristics advect Pi outward
      dPi[M - 1] = -(Pi[M - 1] - Pi[M - 2]) / dy;
      dPi[0] = (Pi[1] - Pi[0]) / dy;
    }
  }
};

double char_abs(const Complex& pi, const Complex& dphi) {
  return std::abs(pi + dphi);
}

}  // namespace

LatticeTrajectory evolve_lattice_mode(const MediumParams& p,
                                      const SwitchingProfile& G, double k,
                                      const LatticeConfig& cfg,
                                      const ModeState& initial,
                                      const std::vector<double>& sample_times,
                                      const LatticeRunOptions& opt) {
  if (cfg.dt_over_dy > 0.9) {
    throw Error(ErrorCode::CFLViolation, "lattice requires dt/dy <= 0.9");
  }
  if (!(cfg.dy > 0.0) || !(cfg.y_extent > cfg.dy)) {
    throw Error(ErrorCode::NonFinite, "lattice geometry invalid");
  }
  LatticeSystem sys{p,
                    G,
                    k,
                    cfg,
                    opt.drive,
                    int(std::lround(cfg.y_extent / cfg.dy)),
                    0,
                    cfg.dy,
                    cfg.boundary == LatticeConfig::Boundary::outgoing_absorbing};
  sys.M = 2 * sys.N + 1;
  const double y_probe = cfg.probe_y > 0.0 ? cfg.probe_y : 0.5 * cfg.y_extent;
  const int jp = sys.N + int(std::lround(y_probe / cfg.dy));
  const int jm = sys.N - int(std::lround(y_probe / cfg.dy));

  std::vector<Complex> s(sys.size(), Complex(0.0, 0.0));
  s[0] = initial.A;
  s[1] = initial.A_dot;
  s[2] = initial.Psi;
  s[3] = initial.Psi_dot;

  LatticeTrajectory traj;
  traj.y_probe = (jp - sys.N) * cfg.dy;
  if (opt.record_field) {
    traj.y.resize(sys.M);
    for (int j = 0; j < sys.M; ++j) traj.y[j] = (j - sys.N) * cfg.dy;
  }

  std::vector<Complex> k1(sys.size()), k2(sys.size()), k3(sys.size()),
      k4(sys.size()), tmp(sys.size());
  const double dt_nominal = cfg.dt_over_dy * cfg.dy;

  auto rk4_step = [&](double t, double dt) {
    sys.rhs(t, s, k1);
    for (std::size_t i = 0; i < s.size(); ++i) tmp[i] = s[i] + 0.5 * dt * k1[i];
    sys.rhs(t + 0.5 * dt, tmp, k2);
    for (std::size_t i = 0; i < s.size(); ++i) tmp[i] = s[i] + 0.5 * dt * k2[i];
    sys.rhs(t + 0.5 * dt, tmp, k3);
    for (std::size_t i = 0; i < s.size(); ++i) tmp[i] = s[i] + dt * k3[i];
    sys.rhs(t + dt, tmp, k4);
    for (std::size_t i = 0; i < s.size(); ++i) {
      s[i] += (dt / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
  };

  auto record = [&](double t) {
    LatticeSample sample;
    sample.t = t;
    sample.mode = {k, s[0], s[1], s[2], s[3], t};
    const Complex* Phi = s.data() + 4;
    const Complex* Pi = s.data() + 4 + sys.M;
    sample.phi_origin = Phi[sys.N];
    if (opt.drive) sample.phi_origin += opt.drive->amplitude(t);
    sample.medium_energy = mode_energy(p, sample.mode);

    double e_inner = 0.0;
    for (int j = jm; j < jp; ++j) {
      const Complex grad = (Phi[j + 1] - Phi[j]) / cfg.dy;
      e_inner += 0.5 * cfg.dy * (std::norm(Pi[j]) + std::norm(grad));
    }
    sample.field_energy_inner = e_inner;

    auto flux_at = [&](int j, double sign) {
      const Complex grad = (Phi[j + 1] - Phi[j - 1]) / (2.0 * cfg.dy);
      // energy flux in +y is -Re(conj(Pi) dPhi/dy); outward = sign * that
      return -sign * (std::conj(Pi[j]) * grad).real();
    };
    sample.outward_flux = flux_at(jp, 1.0) + flux_at(jm, -1.0);

    if (opt.record_field) {
      sample.phi.assign(Phi, Phi + sys.M);
    }
    // boundary characteristic monitors two cells in from each edge
    {
      const int jr = sys.M - 3;
      const Complex din_r = Pi[jr] + (Phi[jr + 1] - Phi[jr - 1]) / (2.0 * cfg.dy);
      const Complex dout_r = Pi[jr] - (Phi[jr + 1] - Phi[jr - 1]) / (2.0 * cfg.dy);
      const int jl = 2;
      const Complex din_l = Pi[jl] - (Phi[jl + 1] - Phi[jl - 1]) / (2.0 * cfg.dy);
      const Complex dout_l = Pi[jl] + (Phi[jl + 1] - Phi[jl - 1]) / (2.0 * cfg.dy);
      traj.max_incoming_characteristic =
          std::max({traj.max_incoming_characteristic, std::abs(din_r),
                    std::abs(din_l)});
      traj.max_outgoing_characteristic =
          std::max({traj.max_outgoing_characteristic, std::abs(dout_r),
                    std::abs(dout_l)});
    }
    traj.samples.push_back(std::move(sample));
  };

  double t = initial.t;
  record(t);
  for (double ts : sample_times) {
    if (ts < t - 1e-12) {
      throw Error(ErrorCode::NonFinite, "sample times must ascend from initial.t");
    }
    if (ts <= t) continue;
    const int nsub = std::max(1, int(std::ceil((ts - t) / dt_nominal)));
    const double dt = (ts - t) / nsub;
    for (int i = 0; i < nsub; ++i) rk4_step(t + i * dt, dt);
    t = ts;
    record(t);
  }

  if (sys.absorbing &&
      traj.max_incoming_characteristic >
          cfg.reflection_tolerance *
              std::max(traj.max_outgoing_characteristic, 1e-300)) {
    throw Error(ErrorCode::ReflectionDetected,
                "energy returned from the absorbing boundary");
  }
  return traj;
}

EliminationReport compare_elimination(const MediumParams& p,
                                      const SwitchingProfile& G, double k,
                                      const LatticeConfig& cfg,
                                      const ModeState& initial, double t1,
                                      double tol,
                                      const EliminationOptions& opt) {
  std::vector<double> times(opt.samples);
  const double t0 = initial.t;
  for (std::size_t i = 0; i < opt.samples; ++i) {
    times[i] = t0 + (t1 - t0) * double(i + 1) / double(opt.samples);
  }

  LatticeRunOptions lrun;
  lrun.drive = opt.drive;
  const LatticeTrajectory lat =
      evolve_lattice_mode(p, G, k, cfg, initial, times, lrun);

  ModeOdeOptions mopt;
  mopt.ode = opt.ode;
  mopt.advanced_elimination = opt.advanced_elimination;
  const std::vector<ModeState> ode =
      integrate_mode_sampled(p, G, initial, opt.drive, times, mopt);

  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    // lat.samples[0] is the initial record
    const Complex dpsi = lat.samples[i + 1].mode.Psi - ode[i].Psi;
    num += std::norm(dpsi);
    den += std::norm(ode[i].Psi);
  }
  EliminationReport rep;
  rep.samples = times.size();
  rep.tol = tol;
  rep.distance = den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
  rep.pass = rep.distance < tol;
  return rep;
}

}  // namespace qrad
