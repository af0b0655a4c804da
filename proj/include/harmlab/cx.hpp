#pragma once

#include <cmath>
#include <complex>

namespace harmlab {

using Cx = std::complex<double>;

// Near-zero guards shared across the library.
inline constexpr double kEpsDiv = 1e-12;  // denominator guard
inline constexpr double kEpsDet = 1e-12;  // Mobius determinant guard

inline bool is_finite(double v) { return std::isfinite(v); }
inline bool is_finite(Cx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

inline Cx unit_phase(double radians) {
  return Cx(std::cos(radians), std::sin(radians));
}

// Deterministic tie-breaking order for grid sweeps: smallest (x, y) first.
inline bool lex_less(Cx a, Cx b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

inline double abs2(Cx v) { return v.real() * v.real() + v.imag() * v.imag(); }

}  // namespace harmlab
