#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "qrad/bogoliubov.hpp"
#include "qrad/errors.hpp"
#include "qrad/first_order.hpp"
#include "qrad/spectrum.hpp"

using namespace qrad;

namespace {

const MediumParams kMedium{1.0, 1.5};

ExactBogoliubov truncated(const ExactBogoliubov& b, double lambda) {
  ExactBogoliubov t = b;
  std::size_t n = 0;
  while (n < b.grid.nodes.size() && b.grid.nodes[n] <= lambda) ++n;
  t.grid.nodes.assign(b.grid.nodes.begin(), b.grid.nodes.begin() + n);
  t.grid.weights.assign(b.grid.weights.begin(), b.grid.weights.begin() + n);
  t.grid.lambda = lambda;
  for (int bi = 0; bi < 2; ++bi) {
    t.alpha_env[bi].assign(b.alpha_env[bi].begin(), b.alpha_env[bi].begin() + n);
    t.beta_env[bi].assign(b.beta_env[bi].begin(), b.beta_env[bi].begin() + n);
  }
  return t;
}

}  // namespace

TEST_CASE("kappa grid construction") {
  const KappaGrid g = make_kappa_grid(1e-3, 10.0, 20, 6);
  CHECK(g.nodes.size() == 21 * 6);
  for (std::size_t i = 1; i < g.nodes.size(); ++i) {
    CHECK(g.nodes[i] > g.nodes[i - 1]);
  }
  CHECK(g.nodes.front() > 0.0);
  CHECK(g.nodes.back() < 10.0);
  // weights integrate 1 over [0, lambda]
  double total = 0.0;
  for (double w : g.weights) total += w;
  CHECK(total == doctest::Approx(10.0).epsilon(1e-12));
  CHECK_THROWS_AS((void)make_kappa_grid(0.0, 1.0, 4, 4), Error);
  CHECK_THROWS_AS((void)make_kappa_grid(1.0, 0.5, 4, 4), Error);
}

TEST_CASE("identity scattering for a switched-off coupling") {
  SwitchingProfile off = WindowProfile{0.0, -1.0, 1.0, 0.0};
  const KappaGrid grid = make_kappa_grid(0.1, 2.0, 3, 4);
  ExtractOptions opt;
  opt.mode.ode.rel_tol = 1e-13;
  opt.mode.ode.abs_tol = 1e-15;
  const ExactBogoliubov ex = extract_bogoliubov(kMedium, off, 0.7, grid, opt);
  for (int b = 0; b < 2; ++b) {
    CHECK(std::abs(ex.alpha_self[b][b] - 1.0) < 1e-10);
    CHECK(std::abs(ex.alpha_self[b][1 - b]) < 1e-10);
    for (int b0 = 0; b0 < 2; ++b0) CHECK(std::abs(ex.beta_self[b][b0]) < 1e-10);
    for (const Complex& c : ex.alpha_env[b]) CHECK(std::abs(c) < 1e-12);
    for (const Complex& c : ex.beta_env[b]) CHECK(std::abs(c) < 1e-12);
  }
  CHECK(unitarity_defect(ex) < 1e-12);
  const auto [nm, np] = occupation_exact(ex);
  CHECK(nm == doctest::Approx(0.0));
  CHECK(np == doctest::Approx(0.0));
}

TEST_CASE("step profiles are rejected") {
  const KappaGrid grid = make_kappa_grid(0.1, 2.0, 3, 4);
  CHECK_THROWS_AS((void)extract_bogoliubov(kMedium, SwitchingProfile(StepProfile{0.1}),
                                           0.7, grid, {}),
                  Error);
}

TEST_CASE("small-coupling pulse against the first-order coefficients") {
  const double tau = 5.0, k = 0.3;
  const KappaGrid grid = make_kappa_grid(1e-3 / tau, 40.0 / tau, 12, 6);
  ExtractOptions opt;
  opt.mode.ode.rel_tol = 1e-10;
  opt.mode.ode.abs_tol = 1e-13;
  opt.threads = 4;

  auto median_dev = [&](double G0, ExactBogoliubov* out = nullptr) {
    SwitchingProfile G = LorentzianProfile{G0, tau};
    const ExactBogoliubov ex = extract_bogoliubov(kMedium, G, k, grid, opt);
    double bmax = 0.0;
    std::vector<double> first(grid.nodes.size());
    for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
      first[i] = std::abs(
          first_order_coeffs(kMedium, G, k, grid.nodes[i], Band::lower).beta);
      bmax = std::max(bmax, first[i]);
    }
    std::vector<double> devs;
    for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
      if (first[i] < 1e-2 * bmax) continue;
      devs.push_back(std::abs(std::abs(ex.beta_env[0][i]) - first[i]) /
                     first[i]);
    }
    std::sort(devs.begin(), devs.end());
    if (out) *out = ex;
    return devs[devs.size() / 2];
  };

  ExactBogoliubov ex;
  const double d1 = median_dev(0.1, &ex);
  CHECK(d1 < 1e-3);  // first order is already accurate at G0 = 0.1

  // residual shrinks as G0^2
  const double d2 = median_dev(0.2);
  CHECK(d2 / d1 == doctest::Approx(4.0).epsilon(0.15));

  // the phase convention of the perturbative module matches the solver
  std::size_t peak = 0;
  double best = 0.0;
  for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
    const double b = std::abs(
        first_order_coeffs(kMedium, SwitchingProfile(LorentzianProfile{0.1, tau}),
                           k, grid.nodes[i], Band::lower)
            .beta);
    if (b > best) {
      best = b;
      peak = i;
    }
  }
  const Complex ratio =
      ex.beta_env[0][peak] /
      first_order_coeffs(kMedium, SwitchingProfile(LorentzianProfile{0.1, tau}),
                         k, grid.nodes[peak], Band::lower)
          .beta;
  CHECK(std::abs(std::arg(ratio)) < 0.01);

  // occupation agrees with the first-order spectrum
  const auto [nm, np] = occupation_exact(ex);
  SwitchingProfile G = LorentzianProfile{0.1, tau};
  const auto spec = spectrum_first_order(kMedium, G, {k}, {});
  CHECK(nm == doctest::Approx(spec.n_minus[0]).epsilon(0.01));
  // upper band suppressed by e^{-2 tau (w+ - w-)} ~ 6e-8 at tau = 5
  CHECK(np < 1e-5 * nm);

  // lower-band row is norm-complete on this grid; truncating the kappa
  // coverage loses norm monotonically
  CHECK(std::abs(ex.norm_defect(Band::lower)) < 1e-4);
  const double full = unitarity_defect(ex);
  const double cut4 = unitarity_defect(truncated(ex, grid.lambda / 4.0));
  const double cut10 = unitarity_defect(truncated(ex, grid.lambda / 10.0));
  CHECK(cut4 > full);
  CHECK(cut10 > cut4);
}

TEST_CASE("JSON round trip") {
  SwitchingProfile G = GaussianProfile{0.15, 2.0};
  const KappaGrid grid = make_kappa_grid(0.05, 4.0, 4, 4);
  ExtractOptions opt;
  opt.mode.ode.rel_tol = 1e-9;
  const ExactBogoliubov ex = extract_bogoliubov(kMedium, G, 0.5, grid, opt);
  const std::string text = to_json_string(ex);
  const ExactBogoliubov back = exact_bogoliubov_from_json(text);
  CHECK(back.k == ex.k);
  CHECK(back.t_in == ex.t_in);
  CHECK(back.grid.nodes == ex.grid.nodes);
  for (int b = 0; b < 2; ++b) {
    for (int b0 = 0; b0 < 2; ++b0) {
      CHECK(back.alpha_self[b][b0] == ex.alpha_self[b][b0]);
      CHECK(back.beta_self[b][b0] == ex.beta_self[b][b0]);
    }
    CHECK(back.alpha_env[b] == ex.alpha_env[b]);
    CHECK(back.beta_env[b] == ex.beta_env[b]);
  }
  CHECK(unitarity_defect(back) == unitarity_defect(ex));
  CHECK_THROWS_AS((void)exact_bogoliubov_from_json("{not json"), Error);
}
