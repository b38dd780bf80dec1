// Curve sweeps over the plotting angle, including the three figure presets.
// Grid points are independent, so evaluation fans out across threads; the
// serial kernel is kept as the reference the parallel one is tested against.
#pragma once

#include <vector>

#include "abscat/curve.hpp"
#include "abscat/params.hpp"

namespace abscat {

enum class Preset { custom, fig1, fig2, fig3 };

enum class ExecutionPolicy { serial, parallel };

/// What a sweep evaluates and where. Presets fix the physics parameters:
///   fig1: three boundary conditions (25,1,3+3i), (20,0,3), (1,10,0),
///         alpha = 0.5, theta0 = 0, via the scattering-matrix route;
///   fig2: the |w| -> infinity limit curve and the pure AB curve, alpha = 0.5;
///   fig3: the (Theta, theta0) surface for u = v = w = 5, alpha = 0.5.
struct SweepSpec {
  Preset preset = Preset::custom;
  double alpha = 0.5;
  /// Incidence angles; empty selects the preset default (a 33-point
  /// [0, 2pi] grid for fig3, the single angle 0 otherwise).
  std::vector<double> theta0_values;
  double u = 0;
  double v = 0;
  double w_re = 0;
  double w_im = 0;
  double k = 1.0;
  bool physical = false;  ///< inputs above are primed; rescale with alpha, k
  int n_theta = 1024;     ///< >= 16
  double exclusion = 1e-3;  ///< forward window half-width, in (0, pi/8)
};

/// Uniform Theta grid on [-pi + exclusion, pi - exclusion].
std::vector<double> theta_grid(int n_theta, double exclusion);

/// Expand "lo:hi:n" into n values from lo to hi inclusive (n >= 1).
std::vector<double> expand_range(double lo, double hi, int n);

/// Evaluate the sweep. Results are keyed by grid index, so serial and
/// parallel policies produce bitwise-identical output.
SweepResult run_sweep(const SweepSpec& spec,
                      ExecutionPolicy policy = ExecutionPolicy::parallel);

}  // namespace abscat
