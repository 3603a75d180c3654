#include "qrad/profile.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "qrad/errors.hpp"

namespace qrad {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2Pi = 0.3989422804014326779;  // (2 pi)^(-1/2)

// E(i x) = (exp(i x) - 1) / (i x), continuous at x = 0.
Complex cis_m1_over_ix(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    // sin(x)/x and (1-cos x)/x series
    const double re = 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    const double im = x * (0.5 - x2 / 24.0 + x2 * x2 / 720.0);
    return {re, im};
  }
  return {std::sin(x) / x, (1.0 - std::cos(x)) / x};
}

// Moments M_j = Integral_0^h s^j exp(i w s) ds for j = 0..3.
std::array<Complex, 4> exp_moments(double w, double h) {
  std::array<Complex, 4> M;
  const double wh = w * h;
  if (std::abs(wh) < 1.0) {
    // series: M_j = sum_m (i w)^m h^(j+m+1) / (m! (j+m+1))
    for (int j = 0; j < 4; ++j) {
      Complex term(h, 0.0);
      for (int p = 0; p < j; ++p) term *= h;  // h^(j+1)
      Complex acc(0.0, 0.0);
      Complex iw(0.0, w);
      Complex fac = term;  // h^(j+m+1) (i w)^m / m!
      for (int m = 0; m < 30; ++m) {
        const Complex contrib = fac / double(j + m + 1);
        acc += contrib;
        if (std::abs(contrib) < 1e-18 * (std::abs(acc) + 1e-300)) break;
        fac *= iw * h / double(m + 1);
      }
      M[j] = acc;
    }
    return M;
  }
  const Complex iw(0.0, w);
  const Complex eiwh = std::polar(1.0, wh);
  M[0] = (eiwh - 1.0) / iw;
  double hj = 1.0;
  for (int j = 1; j < 4; ++j) {
    hj *= h;
    M[j] = (hj * eiwh - double(j) * M[j - 1]) / iw;
  }
  return M;
}

// Raised-cosine ramp transform: R(w) = Integral_0^r (1 - cos(pi s/r))/2 e^{iws} ds.
Complex ramp_transform(double w, double r) {
  if (r <= 0.0) return {0.0, 0.0};
  const double mu = kPi / r;
  return 0.5 * r * cis_m1_over_ix(w * r) -
         0.25 * r *
             (cis_m1_over_ix((w + mu) * r) + cis_m1_over_ix((w - mu) * r));
}

double window_shape(const WindowProfile& p, double t) {
  if (t <= p.t_on || t >= p.t_off) return 0.0;
  const double r = p.ramp;
  if (r > 0.0 && t < p.t_on + r) {
    return 0.5 * (1.0 - std::cos(kPi * (t - p.t_on) / r));
  }
  if (r > 0.0 && t > p.t_off - r) {
    return 0.5 * (1.0 - std::cos(kPi * (p.t_off - t) / r));
  }
  return 1.0;
}

double window_shape_derivative(const WindowProfile& p, double t) {
  const double r = p.ramp;
  if (r <= 0.0 || t <= p.t_on || t >= p.t_off) return 0.0;
  if (t < p.t_on + r) {
    return 0.5 * (kPi / r) * std::sin(kPi * (t - p.t_on) / r);
  }
  if (t > p.t_off - r) {
    return -0.5 * (kPi / r) * std::sin(kPi * (p.t_off - t) / r);
  }
  return 0.0;
}

}  // namespace

void SampledProfile::finalize() {
  const size_t n = t.size();
  if (n != value.size() || n < 2) {
    throw Error(ErrorCode::IOError, "sampled profile needs >= 2 (t,value) pairs");
  }
  for (size_t i = 0; i < n; ++i) {
    if (!std::isfinite(t[i]) || !std::isfinite(value[i])) {
      throw Error(ErrorCode::NonFinite, "sampled profile contains non-finite data");
    }
    if (i > 0 && t[i] <= t[i - 1]) {
      throw Error(ErrorCode::IOError, "sampled profile grid must be strictly increasing");
    }
  }
  // natural cubic spline second derivatives (Thomas algorithm)
  d2.assign(n, 0.0);
  if (n > 2) {
    std::vector<double> diag(n, 0.0), rhs(n, 0.0), upper(n, 0.0);
    for (size_t i = 1; i + 1 < n; ++i) {
      const double hl = t[i] - t[i - 1];
      const double hr = t[i + 1] - t[i];
      diag[i] = (hl + hr) / 3.0;
      upper[i] = hr / 6.0;
      rhs[i] = (value[i + 1] - value[i]) / hr - (value[i] - value[i - 1]) / hl;
    }
    for (size_t i = 2; i + 1 < n; ++i) {
      const double lower = (t[i] - t[i - 1]) / 6.0;
      const double m = lower / diag[i - 1];
      diag[i] -= m * upper[i - 1];
      rhs[i] -= m * rhs[i - 1];
    }
    for (size_t i = n - 2; i >= 1; --i) {
      d2[i] = (rhs[i] - upper[i] * d2[i + 1]) / diag[i];
      if (i == 1) break;
    }
  }
  finalized = true;
}

namespace {

// cubic coefficients of segment i: value = c0 + c1 s + c2 s^2 + c3 s^3, s = t - t_i
std::array<double, 4> segment_coeffs(const SampledProfile& p, size_t i) {
  const double h = p.t[i + 1] - p.t[i];
  const double c0 = p.value[i];
  const double c1 = (p.value[i + 1] - p.value[i]) / h -
                    h * (2.0 * p.d2[i] + p.d2[i + 1]) / 6.0;
  const double c2 = 0.5 * p.d2[i];
  const double c3 = (p.d2[i + 1] - p.d2[i]) / (6.0 * h);
  return {c0, c1, c2, c3};
}

double sampled_value(const SampledProfile& p, double t) {
  if (!p.finalized) {
    throw Error(ErrorCode::IOError, "sampled profile not finalized");
  }
  if (t < p.t.front() || t > p.t.back()) return 0.0;
  const auto it = std::upper_bound(p.t.begin(), p.t.end(), t);
  size_t i = (it == p.t.begin()) ? 0 : size_t(it - p.t.begin()) - 1;
  if (i + 1 >= p.t.size()) i = p.t.size() - 2;
  const auto c = segment_coeffs(p, i);
  const double s = t - p.t[i];
  return ((c[3] * s + c[2]) * s + c[1]) * s + c[0];
}

double sampled_derivative(const SampledProfile& p, double t) {
  if (t < p.t.front() || t > p.t.back()) return 0.0;
  const auto it = std::upper_bound(p.t.begin(), p.t.end(), t);
  size_t i = (it == p.t.begin()) ? 0 : size_t(it - p.t.begin()) - 1;
  if (i + 1 >= p.t.size()) i = p.t.size() - 2;
  const auto c = segment_coeffs(p, i);
  const double s = t - p.t[i];
  return (3.0 * c[3] * s + 2.0 * c[2]) * s + c[1];
}

Complex sampled_fourier(const SampledProfile& p, double omega) {
  double h_max = 0.0;
  for (size_t i = 0; i + 1 < p.t.size(); ++i) {
    h_max = std::max(h_max, p.t[i + 1] - p.t[i]);
  }
  // require >= 8 samples per period at omega
  if (std::abs(omega) * h_max > 2.0 * kPi / 8.0) {
    throw Error(ErrorCode::UnresolvedFrequency,
                "sampled grid too coarse for requested frequency");
  }
  Complex acc(0.0, 0.0);
  for (size_t i = 0; i + 1 < p.t.size(); ++i) {
    const double h = p.t[i + 1] - p.t[i];
    const auto c = segment_coeffs(p, i);
    const auto M = exp_moments(omega, h);
    Complex seg(0.0, 0.0);
    for (int j = 0; j < 4; ++j) seg += c[j] * M[j];
    acc += std::polar(1.0, omega * p.t[i]) * seg;
  }
  return kInvSqrt2Pi * acc;
}

}  // namespace

double profile_value(const SwitchingProfile& G, double t) {
  return std::visit(
      [t](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, LorentzianProfile>) {
          return p.G0 * p.tau * p.tau / (p.tau * p.tau + t * t);
        } else if constexpr (std::is_same_v<T, GaussianProfile>) {
          return p.G0 * std::exp(-t * t / (2.0 * p.tau * p.tau));
        } else if constexpr (std::is_same_v<T, StepProfile>) {
          return t < 0.0 ? p.G0 : 0.0;
        } else if constexpr (std::is_same_v<T, WindowProfile>) {
          return p.G0 * window_shape(p, t);
        } else {
          return sampled_value(p, t);
        }
      },
      G);
}

double profile_derivative(const SwitchingProfile& G, double t) {
  return std::visit(
      [t](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, LorentzianProfile>) {
          const double d = p.tau * p.tau + t * t;
          return -2.0 * p.G0 * p.tau * p.tau * t / (d * d);
        } else if constexpr (std::is_same_v<T, GaussianProfile>) {
          return -p.G0 * (t / (p.tau * p.tau)) *
                 std::exp(-t * t / (2.0 * p.tau * p.tau));
        } else if constexpr (std::is_same_v<T, StepProfile>) {
          return 0.0;  // distributional at t = 0; not used by integrators
        } else if constexpr (std::is_same_v<T, WindowProfile>) {
          return p.G0 * window_shape_derivative(p, t);
        } else {
          return sampled_derivative(p, t);
        }
      },
      G);
}

SpectralAmplitude profile_fourier(const SwitchingProfile& G, double omega) {
  Complex v = std::visit(
      [omega](const auto& p) -> Complex {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, LorentzianProfile>) {
          return {p.G0 * p.tau * std::sqrt(kPi / 2.0) *
                      std::exp(-p.tau * std::abs(omega)),
                  0.0};
        } else if constexpr (std::is_same_v<T, GaussianProfile>) {
          return {p.G0 * p.tau * std::exp(-0.5 * omega * omega * p.tau * p.tau),
                  0.0};
        } else if constexpr (std::is_same_v<T, StepProfile>) {
          if (omega == 0.0) {
            throw Error(ErrorCode::NonFinite,
                        "step transform is distributional at omega = 0");
          }
          return {0.0, -p.G0 * kInvSqrt2Pi / omega};
        } else if constexpr (std::is_same_v<T, WindowProfile>) {
          const double a = p.t_on, b = p.t_off, r = p.ramp;
          const double d = b - a - 2.0 * r;  // plateau length
          Complex I = std::polar(1.0, omega * a) * ramp_transform(omega, r);
          I += std::polar(1.0, omega * (a + r)) * d *
               cis_m1_over_ix(omega * d);
          I += std::polar(1.0, omega * b) * ramp_transform(-omega, r);
          return kInvSqrt2Pi * p.G0 * I;
        } else {
          return sampled_fourier(p, omega);
        }
      },
      G);
  return {omega, v};
}

double profile_peak(const SwitchingProfile& G) {
  return std::visit(
      [](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SampledProfile>) {
          double m = 0.0;
          for (double v : p.value) m = std::max(m, std::abs(v));
          return m;
        } else {
          return p.G0;
        }
      },
      G);
}

double profile_support_halfwidth(const SwitchingProfile& G,
                                 double threshold_ratio) {
  const double thr = std::max(threshold_ratio, 1e-300);
  return std::visit(
      [thr](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, LorentzianProfile>) {
          if (thr >= 1.0) return 0.0;
          return p.tau * std::sqrt(1.0 / thr - 1.0);
        } else if constexpr (std::is_same_v<T, GaussianProfile>) {
          if (thr >= 1.0) return 0.0;
          return p.tau * std::sqrt(2.0 * std::log(1.0 / thr));
        } else if constexpr (std::is_same_v<T, StepProfile>) {
          return std::numeric_limits<double>::infinity();
        } else if constexpr (std::is_same_v<T, WindowProfile>) {
          return std::max(std::abs(p.t_on), std::abs(p.t_off));
        } else {
          return std::max(std::abs(p.t.front()), std::abs(p.t.back()));
        }
      },
      G);
}

bool profile_switches_off(const SwitchingProfile& G) {
  return !std::holds_alternative<StepProfile>(G);
}

SwitchingProfile profile_scaled(const SwitchingProfile& G, double c) {
  SwitchingProfile out = G;
  std::visit(
      [c](auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SampledProfile>) {
          for (double& v : p.value) v *= c;
        } else {
          p.G0 *= c;
        }
      },
      out);
  return out;
}

SampledProfile load_sampled_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::IOError, "cannot open profile file: " + path);
  }
  SampledProfile p;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // strip whitespace and skip blanks / comments
    auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    std::string body = line.substr(first);
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream ss(body);
    double tv = 0.0, gv = 0.0;
    if (!(ss >> tv >> gv)) {
      if (lineno == 1) continue;  // header line
      throw Error(ErrorCode::IOError,
                  "malformed profile line " + std::to_string(lineno) + " in " + path);
    }
    p.t.push_back(tv);
    p.value.push_back(gv);
  }
  p.finalize();
  return p;
}

void validate_profile(const SwitchingProfile& G) {
  std::visit(
      [](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SampledProfile>) {
          SampledProfile copy = p;
          copy.finalize();
        } else {
          if (!std::isfinite(p.G0)) {
            throw Error(ErrorCode::NonFinite, "profile G0 must be finite");
          }
          if (p.G0 < 0.0) {
            throw Error(ErrorCode::NegativeCoupling, "profile G0 must be >= 0");
          }
          if constexpr (std::is_same_v<T, LorentzianProfile> ||
                        std::is_same_v<T, GaussianProfile>) {
            if (!(p.tau > 0.0) || !std::isfinite(p.tau)) {
              throw Error(ErrorCode::NonFinite, "profile width tau must be > 0");
            }
          }
          if constexpr (std::is_same_v<T, WindowProfile>) {
            if (!(p.t_off > p.t_on)) {
              throw Error(ErrorCode::NonFinite, "window requires t_off > t_on");
            }
            if (p.ramp < 0.0 || 2.0 * p.ramp > p.t_off - p.t_on) {
              throw Error(ErrorCode::NonFinite,
                          "window ramps must satisfy 0 <= 2 ramp <= t_off - t_on");
            }
          }
        }
      },
      G);
}

}  // namespace qrad
