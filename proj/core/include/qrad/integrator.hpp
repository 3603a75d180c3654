#ifndef QRAD_INTEGRATOR_HPP
#define QRAD_INTEGRATOR_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "qrad/types.hpp"

namespace qrad {

// Embedded Dormand-Prince 5(4) pair, specialized to the 4-complex-component
// mode systems used here. The systems are non-stiff for G^2 < 4 Omega;
// oscillatory drives are resolved by the error-based step control alone.

using State4 = std::array<Complex, 4>;
using Rhs4 = std::function<void(double t, const State4& y, State4& dydt)>;

struct IntegratorOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double initial_step = 0.0;  // 0 -> heuristic
  double max_step = 0.0;      // 0 -> |t1 - t0|
  double fixed_step = 0.0;    // > 0 disables adaptivity (convergence tests)
  std::size_t max_steps = 50'000'000;
};

struct IntegrationStats {
  std::size_t steps_accepted = 0;
  std::size_t steps_rejected = 0;
  std::size_t rhs_evaluations = 0;
};

/// Integrates y' = f(t, y) from (t0, y0) to t1 (t1 > t0). The observer, if
/// set, is called after every accepted step including the final clipped one.
/// Throws StepSizeUnderflow / NonFiniteState.
IntegrationStats integrate_dp54(
    const Rhs4& f, State4& y, double t0, double t1,
    const IntegratorOptions& opt = {},
    const std::function<void(double, const State4&)>& observer = nullptr);

/// Same, but additionally lands exactly on every time in `samples`
/// (ascending, within [t0, t1]) and records the states there.
IntegrationStats integrate_dp54_sampled(const Rhs4& f, State4& y, double t0,
                                        double t1,
                                        const std::vector<double>& samples,
                                        std::vector<State4>& states,
                                        const IntegratorOptions& opt = {});

}  // namespace qrad

#endif  // QRAD_INTEGRATOR_HPP
