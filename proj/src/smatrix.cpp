#include "abscat/smatrix.hpp"

#include <cmath>
#include <numbers>

#include "abscat/angles.hpp"
#include "abscat/errors.hpp"

namespace abscat {

namespace {

using std::numbers::pi;
constexpr std::complex<double> kI{0.0, 1.0};

double guarded_difference(const ScatteringGeometry& g, double forward_exclusion) {
  const double d = reduced_difference(g);
  if (std::abs(d) < forward_exclusion)
    throw forward_singularity_error(
        "cross section is singular in the forward direction theta = theta0");
  return d;
}

}  // namespace

double reduced_difference(const ScatteringGeometry& g) {
  return reduce_signed_angle(g.theta - g.theta0);
}

SigmaMatrix sigma_matrix(const EffectiveParams& ep) {
  const double a = ep.alpha.value();
  const std::complex<double> phase = unit_phase(pi * a);
  const double sin_a = phase.imag();
  const double p = ep.u * ep.v - std::norm(ep.w);

  SigmaMatrix sm;
  sm.det_n = p + phase * ep.u - std::conj(phase) * ep.v - 1.0;
  const std::complex<double> inv_det = 1.0 / sm.det_n;
  sm.s11 = inv_det * (std::conj(phase) * p + ep.u - ep.v - phase);
  sm.s12 = inv_det * (-2.0 * kI * sin_a * std::conj(ep.w));
  sm.s21 = inv_det * (-2.0 * kI * sin_a * ep.w);
  sm.s22 = inv_det * (phase * p + ep.u - ep.v - std::conj(phase));
  return sm;
}

std::complex<double> s_continuous(const SigmaMatrix& sm, double alpha,
                                  const ScatteringGeometry& g,
                                  double forward_exclusion) {
  const double d = guarded_difference(g, forward_exclusion);
  const std::complex<double> phase = unit_phase(pi * alpha);
  const double sin_a = phase.imag();

  const std::complex<double> pole =
      sin_a * unit_phase(-d / 2.0) / std::sin(d / 2.0);
  const std::complex<double> bracket =
      (sm.s11 - phase) * unit_phase(-d) + sm.s12 * unit_phase(-g.theta) +
      sm.s21 * unit_phase(g.theta0) + sm.s22 - std::conj(phase);
  return (pole + bracket) / (2.0 * pi);
}

std::complex<double> s_continuous(const EffectiveParams& ep,
                                  const ScatteringGeometry& g,
                                  double forward_exclusion) {
  return s_continuous(sigma_matrix(ep), ep.alpha.value(), g, forward_exclusion);
}

double dcs_general(const EffectiveParams& ep, const ScatteringGeometry& g,
                   double forward_exclusion) {
  const double d = guarded_difference(g, forward_exclusion);
  const double a = ep.alpha.value();
  const std::complex<double> phase = unit_phase(pi * a);
  const double sin_a = phase.imag();
  const double half_sin = std::sin(d / 2.0);
  const double p = ep.u * ep.v - std::norm(ep.w);

  // Half-sum taken on the same branch as the reduced difference, so that
  // theta_bar + d/2 == theta and theta_bar - d/2 == theta0 (mod 2pi).
  const double theta_bar = g.theta - d / 2.0;

  const std::complex<double> shifted = unit_phase(pi * a - d / 2.0);
  const std::complex<double> det_n =
      p + phase * ep.u - std::conj(phase) * ep.v - 1.0;
  const std::complex<double> inner =
      2.0 * half_sin * p + kI * shifted * ep.u +
      kI * std::conj(shifted) * ep.v +
      2.0 * kI * std::real(unit_phase(theta_bar) * ep.w);
  const std::complex<double> bracket = 1.0 / (2.0 * half_sin) - inner / det_n;

  return 2.0 * sin_a * sin_a / (pi * ep.k) * std::norm(bracket);
}

double dcs_from_smatrix(const SigmaMatrix& sm, double alpha, double k,
                        const ScatteringGeometry& g, double forward_exclusion) {
  const std::complex<double> s = s_continuous(sm, alpha, g, forward_exclusion);
  return 2.0 * pi / k * std::norm(s);
}

double dcs_from_smatrix(const EffectiveParams& ep, const ScatteringGeometry& g,
                        double forward_exclusion) {
  return dcs_from_smatrix(sigma_matrix(ep), ep.alpha.value(), ep.k, g,
                          forward_exclusion);
}

double normalized_dcs(const SigmaMatrix& sm, double alpha,
                      const ScatteringGeometry& g, double forward_exclusion) {
  const std::complex<double> s = s_continuous(sm, alpha, g, forward_exclusion);
  return 2.0 * pi * std::norm(s);
}

double normalized_dcs(const EffectiveParams& ep, const ScatteringGeometry& g,
                      double forward_exclusion) {
  return normalized_dcs(sigma_matrix(ep), ep.alpha.value(), g, forward_exclusion);
}

}  // namespace abscat
