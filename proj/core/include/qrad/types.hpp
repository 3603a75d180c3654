#ifndef QRAD_TYPES_HPP
#define QRAD_TYPES_HPP

#include <array>
#include <complex>

namespace qrad {

using Complex = std::complex<double>;

/// Polariton band label. The lower band is photon-like at small k, the
/// upper band behaves like a massive relativistic branch.
enum class Band { lower, upper };

inline constexpr std::array<Band, 2> kBands = {Band::lower, Band::upper};

inline constexpr int band_index(Band b) { return b == Band::lower ? 0 : 1; }

inline const char* band_name(Band b) {
  return b == Band::lower ? "lower" : "upper";
}

}  // namespace qrad

#endif  // QRAD_TYPES_HPP
