// Angle reduction and phase helpers used throughout the scattering formulas.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace abscat {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduce an angle to the interval (-pi, pi].
inline double reduce_signed_angle(double x) {
  double r = std::remainder(x, kTwoPi);
  if (r <= -std::numbers::pi) r += kTwoPi;
  return r;
}

/// exp(i x) as {cos x, sin x}. Routed through one sincos call where the C
/// library provides it: optimizers fuse adjacent sin/cos pairs into sincos
/// only at some optimization levels, and glibc's sincos is not bit-identical
/// to separate sin/cos calls for every argument, so leaving the choice to
/// the compiler makes output files depend on build flags.
inline std::complex<double> unit_phase(double x) {
#if defined(__GLIBC__)
  double s, c;
  ::sincos(x, &s, &c);
  return {c, s};
#else
  return {std::cos(x), std::sin(x)};
#endif
}

}  // namespace abscat
