#include "qrad/bogoliubov.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "qrad/errors.hpp"
#include "qrad/parallel.hpp"
#include "qrad/quadrature.hpp"

namespace qrad {

KappaGrid make_kappa_grid(double kappa_min, double lambda, std::size_t panels,
                          std::size_t gl_order) {
  if (!(kappa_min > 0.0) || !(lambda > kappa_min)) {
    throw Error(ErrorCode::UnconvergedKappaGrid,
                "kappa grid requires 0 < kappa_min < lambda");
  }
  KappaGrid g;
  g.kappa_min = kappa_min;
  g.lambda = lambda;
  const GaussLegendreRule base = gauss_legendre(gl_order);
  const double ratio = std::pow(lambda / kappa_min, 1.0 / double(panels));
  double lo = kappa_min;
  // first panel covers [0, kappa_min] linearly so the integral starts at 0
  for (std::size_t i = 0; i < gl_order; ++i) {
    g.nodes.push_back(0.5 * kappa_min * (base.nodes[i] + 1.0));
    g.weights.push_back(0.5 * kappa_min * base.weights[i]);
  }
  for (std::size_t p = 0; p < panels; ++p) {
    const double hi = (p + 1 == panels) ? lambda : lo * ratio;
    const double h = hi - lo;
    for (std::size_t i = 0; i < gl_order; ++i) {
      g.nodes.push_back(lo + 0.5 * h * (base.nodes[i] + 1.0));
      g.weights.push_back(0.5 * h * base.weights[i]);
    }
    lo = hi;
  }
  return g;
}

double ExactBogoliubov::norm_defect(Band b) const {
  const int bi = band_index(b);
  double total = -1.0;
  for (int b0 = 0; b0 < 2; ++b0) {
    total += std::norm(alpha_self[bi][b0]) - std::norm(beta_self[bi][b0]);
  }
  double env = 0.0;
  for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
    env += grid.weights[i] *
           (std::norm(alpha_env[bi][i]) - std::norm(beta_env[bi][i]));
  }
  return total + 2.0 * env;  // both signs of kappa
}

ExactBogoliubov extract_bogoliubov(const MediumParams& p,
                                   const SwitchingProfile& G, double k,
                                   const KappaGrid& grid,
                                   const ExtractOptions& opt) {
  if (!profile_switches_off(G)) {
    throw Error(ErrorCode::NonFinite,
                "Bogoliubov extraction needs a profile with compact support");
  }
  const double T = profile_support_halfwidth(G, opt.support_threshold);
  if (!std::isfinite(T)) {
    throw Error(ErrorCode::NonFinite, "profile support is unbounded");
  }
  const HopfieldBasis basis = hopfield_diagonalize(p, k);

  ExactBogoliubov out;
  out.k = k;
  out.grid = grid;
  out.t_in = -T;
  out.t_out = T;

  // polariton sector: two complex in-modes; the conjugate solutions are
  // the conjugates of these since the ODE coefficients are real
  for (Band b0 : kBands) {
    ModeState init = polariton_mode_state(p, basis, b0, out.t_in);
    init.t = out.t_in;
    const ModeState fin =
        evolve_mode(p, G, init, std::nullopt, out.t_out, opt.mode);
    const Vec4c z = mode_quadratures(p, fin);
    Vec4c zc;
    for (int j = 0; j < 4; ++j) zc[j] = std::conj(z[j]);
    for (Band b : kBands) {
      out.alpha_self[band_index(b)][band_index(b0)] =
          basis.positive_frequency_amplitude(z, out.t_out, b);
      out.beta_self[band_index(b)][band_index(b0)] =
          basis.positive_frequency_amplitude(zc, out.t_out, b);
    }
  }

  // environment sector: one driven run per kappa node
  const std::size_t nk = grid.nodes.size();
  for (int bi = 0; bi < 2; ++bi) {
    out.alpha_env[bi].resize(nk);
    out.beta_env[bi].resize(nk);
  }
  parallel_for(nk, opt.threads, [&](std::size_t i) {
    DriveMode drive{grid.nodes[i], DriveMode::Kind::positive_frequency};
    ModeState init;
    init.k = k;
    init.t = out.t_in;
    const ModeState fin = evolve_mode(p, G, init, drive, out.t_out, opt.mode);
    const Vec4c z = mode_quadratures(p, fin);
    Vec4c zc;
    for (int j = 0; j < 4; ++j) zc[j] = std::conj(z[j]);
    for (Band b : kBands) {
      out.alpha_env[band_index(b)][i] =
          basis.positive_frequency_amplitude(z, out.t_out, b);
      out.beta_env[band_index(b)][i] =
          basis.positive_frequency_amplitude(zc, out.t_out, b);
    }
  });
  return out;
}

std::pair<double, double> occupation_exact(const ExactBogoliubov& b) {
  std::array<double, 2> n{};
  for (int bi = 0; bi < 2; ++bi) {
    for (int b0 = 0; b0 < 2; ++b0) n[bi] += std::norm(b.beta_self[bi][b0]);
    double env = 0.0;
    for (std::size_t i = 0; i < b.grid.nodes.size(); ++i) {
      env += b.grid.weights[i] * std::norm(b.beta_env[bi][i]);
    }
    n[bi] += 2.0 * env;
  }
  return {n[0], n[1]};
}

double unitarity_defect(const ExactBogoliubov& b) {
  return std::max(std::abs(b.norm_defect(Band::lower)),
                  std::abs(b.norm_defect(Band::upper)));
}

namespace {

nlohmann::json complex_to_json(const Complex& c) {
  return nlohmann::json::array({c.real(), c.imag()});
}

Complex complex_from_json(const nlohmann::json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

nlohmann::json complex_vector_to_json(const std::vector<Complex>& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : v) arr.push_back(complex_to_json(c));
  return arr;
}

std::vector<Complex> complex_vector_from_json(const nlohmann::json& j) {
  std::vector<Complex> v;
  for (const auto& e : j) v.push_back(complex_from_json(e));
  return v;
}

}  // namespace

std::string to_json_string(const ExactBogoliubov& b) {
  nlohmann::json j;
  j["k"] = b.k;
  j["t_in"] = b.t_in;
  j["t_out"] = b.t_out;
  j["kappa_grid"] = {{"nodes", b.grid.nodes},
                     {"weights", b.grid.weights},
                     {"kappa_min", b.grid.kappa_min},
                     {"lambda", b.grid.lambda}};
  for (int bi = 0; bi < 2; ++bi) {
    const std::string name = bi == 0 ? "lower" : "upper";
    nlohmann::json self_a = nlohmann::json::array();
    nlohmann::json self_b = nlohmann::json::array();
    for (int b0 = 0; b0 < 2; ++b0) {
      self_a.push_back(complex_to_json(b.alpha_self[bi][b0]));
      self_b.push_back(complex_to_json(b.beta_self[bi][b0]));
    }
    j["alpha_self"][name] = self_a;
    j["beta_self"][name] = self_b;
    j["alpha_env"][name] = complex_vector_to_json(b.alpha_env[bi]);
    j["beta_env"][name] = complex_vector_to_json(b.beta_env[bi]);
  }
  return j.dump(2);
}

ExactBogoliubov exact_bogoliubov_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::IOError, e.what());
  }
  ExactBogoliubov b;
  try {
    b.k = j.at("k").get<double>();
    b.t_in = j.at("t_in").get<double>();
    b.t_out = j.at("t_out").get<double>();
    const auto& grid = j.at("kappa_grid");
    b.grid.nodes = grid.at("nodes").get<std::vector<double>>();
    b.grid.weights = grid.at("weights").get<std::vector<double>>();
    b.grid.kappa_min = grid.at("kappa_min").get<double>();
    b.grid.lambda = grid.at("lambda").get<double>();
    for (int bi = 0; bi < 2; ++bi) {
      const std::string name = bi == 0 ? "lower" : "upper";
      for (int b0 = 0; b0 < 2; ++b0) {
        b.alpha_self[bi][b0] = complex_from_json(j.at("alpha_self").at(name).at(b0));
        b.beta_self[bi][b0] = complex_from_json(j.at("beta_self").at(name).at(b0));
      }
      b.alpha_env[bi] = complex_vector_from_json(j.at("alpha_env").at(name));
      b.beta_env[bi] = complex_vector_from_json(j.at("beta_env").at(name));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::IOError, e.what());
  }
  return b;
}

}  // namespace qrad
