// Continuous part of the scattering matrix and the general differential
// cross section. The two quantities give two independent routes to |S|^2
// and are cross-validated in the test suite.
#pragma once

#include <complex>

#include "abscat/params.hpp"

namespace abscat {

/// Default guard radius around the forward direction theta = theta0.
inline constexpr double kForwardExclusionDefault = 1e-9;

/// Scattering angles in radians. theta0 is the incidence direction;
/// it matters on its own whenever w != 0 (broken rotational symmetry).
struct ScatteringGeometry {
  double theta = 0;
  double theta0 = 0;
};

/// theta - theta0 reduced into (-pi, pi].
double reduced_difference(const ScatteringGeometry& g);

/// The 2x2 matrix coupling the two singular channels, plus the determinant
/// combination det N it is normalized by. det N is provably nonzero for
/// every alpha in (0,1), real u, v and complex w.
struct SigmaMatrix {
  std::complex<double> s11, s12, s21, s22;
  std::complex<double> det_n;
};

SigmaMatrix sigma_matrix(const EffectiveParams& ep);

/// Continuous (non-delta) part of the scattering matrix S(k; theta, theta0).
/// Throws forward_singularity_error when |theta - theta0| (reduced) is
/// below the exclusion radius.
std::complex<double> s_continuous(
    const SigmaMatrix& sm, double alpha, const ScatteringGeometry& g,
    double forward_exclusion = kForwardExclusionDefault);

std::complex<double> s_continuous(
    const EffectiveParams& ep, const ScatteringGeometry& g,
    double forward_exclusion = kForwardExclusionDefault);

/// Differential cross section d(sigma)/d(theta) from the closed-form
/// modulus expression.
double dcs_general(const EffectiveParams& ep, const ScatteringGeometry& g,
                   double forward_exclusion = kForwardExclusionDefault);

/// Differential cross section via (2*pi/k)*|s_continuous|^2. Independent
/// oracle for dcs_general.
double dcs_from_smatrix(const EffectiveParams& ep, const ScatteringGeometry& g,
                        double forward_exclusion = kForwardExclusionDefault);

double dcs_from_smatrix(const SigmaMatrix& sm, double alpha, double k,
                        const ScatteringGeometry& g,
                        double forward_exclusion = kForwardExclusionDefault);

/// k * d(sigma)/d(theta) = 2*pi*|S|^2, the dimensionless quantity all
/// curve sweeps tabulate.
double normalized_dcs(const EffectiveParams& ep, const ScatteringGeometry& g,
                      double forward_exclusion = kForwardExclusionDefault);

double normalized_dcs(const SigmaMatrix& sm, double alpha,
                      const ScatteringGeometry& g,
                      double forward_exclusion = kForwardExclusionDefault);

}  // namespace abscat
