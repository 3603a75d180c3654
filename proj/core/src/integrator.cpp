#include "qrad/integrator.hpp"

#include <algorithm>
#include <cmath>

#include "qrad/errors.hpp"

namespace qrad {

namespace {

// Dormand-Prince coefficients
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                 a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0,
                 a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                 a65 = -5103.0 / 18656.0;
constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                 b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
// b - bhat (error weights), bhat being the embedded 4th-order solution
constexpr double e1 = 35.0 / 384.0 - 5179.0 / 57600.0;
constexpr double e3 = 500.0 / 1113.0 - 7571.0 / 16695.0;
constexpr double e4 = 125.0 / 192.0 - 393.0 / 640.0;
constexpr double e5 = -2187.0 / 6784.0 + 92097.0 / 339200.0;
constexpr double e6 = 11.0 / 84.0 - 187.0 / 2100.0;
constexpr double e7 = -1.0 / 40.0;

bool finite(const State4& y) {
  for (const auto& c : y) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  }
  return true;
}

struct Stepper {
  const Rhs4& f;
  IntegrationStats stats;
  State4 k1, k2, k3, k4, k5, k6, k7, ytmp;

  explicit Stepper(const Rhs4& rhs) : f(rhs) {}

  // One trial step from (t, y) with size h. Returns the scaled error norm
  // and fills ynew; k1 must hold f(t, y) on entry (FSAL).
  double attempt(double t, const State4& y, double h, State4& ynew,
                 double rel_tol, double abs_tol) {
    for (int i = 0; i < 4; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
    f(t + h / 5.0, ytmp, k2);
    for (int i = 0; i < 4; ++i)
      ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    f(t + 3.0 * h / 10.0, ytmp, k3);
    for (int i = 0; i < 4; ++i)
      ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    f(t + 4.0 * h / 5.0, ytmp, k4);
    for (int i = 0; i < 4; ++i)
      ytmp[i] =
          y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    f(t + 8.0 * h / 9.0, ytmp, k5);
    for (int i = 0; i < 4; ++i)
      ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                            a64 * k4[i] + a65 * k5[i]);
    f(t + h, ytmp, k6);
    for (int i = 0; i < 4; ++i)
      ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                            b6 * k6[i]);
    f(t + h, ynew, k7);
    stats.rhs_evaluations += 6;

    double err2 = 0.0;
    for (int i = 0; i < 4; ++i) {
      const Complex e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                             e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      const double sc =
          abs_tol + rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      const double r = std::abs(e) / sc;
      err2 += r * r;
    }
    return std::sqrt(err2 / 4.0);
  }
};

}  // namespace

IntegrationStats integrate_dp54(
    const Rhs4& f, State4& y, double t0, double t1,
    const IntegratorOptions& opt,
    const std::function<void(double, const State4&)>& observer) {
  if (!(t1 > t0)) {
    if (t1 == t0) return {};
    throw Error(ErrorCode::NonFiniteState, "integration span must be forward");
  }
  const double span = t1 - t0;
  const double h_max = opt.max_step > 0.0 ? opt.max_step : span;

  Stepper st(f);
  double t = t0;
  st.f(t, y, st.k1);
  st.stats.rhs_evaluations += 1;

  double h;
  if (opt.fixed_step > 0.0) {
    h = opt.fixed_step;
  } else if (opt.initial_step > 0.0) {
    h = std::min(opt.initial_step, h_max);
  } else {
    // crude heuristic: start small relative to both span and RHS magnitude
    double ynorm = 0.0, fnorm = 0.0;
    for (int i = 0; i < 4; ++i) {
      ynorm = std::max(ynorm, std::abs(y[i]));
      fnorm = std::max(fnorm, std::abs(st.k1[i]));
    }
    h = (fnorm > 0.0) ? 0.01 * (ynorm + opt.abs_tol) / fnorm : 1e-3 * span;
    h = std::clamp(h, 1e-8 * span, std::min(0.1 * span, h_max));
  }

  State4 ynew;
  while (t < t1) {
    if (st.stats.steps_accepted + st.stats.steps_rejected > opt.max_steps) {
      throw Error(ErrorCode::StepSizeUnderflow,
                  "step budget exhausted before reaching t1");
    }
    const bool clipped = (t + h >= t1);
    const double h_eff = clipped ? (t1 - t) : h;

    const double err =
        st.attempt(t, y, h_eff, ynew, opt.rel_tol, opt.abs_tol);
    if (!finite(ynew)) {
      throw Error(ErrorCode::NonFiniteState,
                  "state became non-finite during integration");
    }

    if (opt.fixed_step > 0.0 || err <= 1.0) {
      t += h_eff;
      y = ynew;
      st.k1 = st.k7;  // FSAL
      ++st.stats.steps_accepted;
      if (observer) observer(t, y);
      if (opt.fixed_step <= 0.0) {
        const double fac =
            std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.2), 0.2, 5.0);
        h = std::min(h * fac, h_max);
      }
    } else {
      ++st.stats.steps_rejected;
      const double fac = std::max(0.9 * std::pow(err, -0.2), 0.1);
      h *= fac;
      if (h < 1e-14 * span) {
        throw Error(ErrorCode::StepSizeUnderflow,
                    "adaptive step size underflow");
      }
      // k1 still holds f(t, y); retry
    }
  }
  return st.stats;
}

IntegrationStats integrate_dp54_sampled(const Rhs4& f, State4& y, double t0,
                                        double t1,
                                        const std::vector<double>& samples,
                                        std::vector<State4>& states,
                                        const IntegratorOptions& opt) {
  states.clear();
  states.reserve(samples.size());
  IntegrationStats total;
  double t = t0;
  for (double ts : samples) {
    if (ts < t0 || ts > t1) {
      throw Error(ErrorCode::NonFiniteState, "sample time outside span");
    }
    if (ts > t) {
      const auto s = integrate_dp54(f, y, t, ts, opt);
      total.steps_accepted += s.steps_accepted;
      total.steps_rejected += s.steps_rejected;
      total.rhs_evaluations += s.rhs_evaluations;
      t = ts;
    }
    states.push_back(y);
  }
  if (t < t1) {
    const auto s = integrate_dp54(f, y, t, t1, opt);
    total.steps_accepted += s.steps_accepted;
    total.steps_rejected += s.steps_rejected;
    total.rhs_evaluations += s.rhs_evaluations;
  }
  return total;
}

}  // namespace qrad
