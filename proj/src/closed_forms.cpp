#include "abscat/closed_forms.hpp"

#include <cmath>
#include <numbers>

#include "abscat/angles.hpp"
#include "abscat/errors.hpp"

namespace abscat {

namespace {

using std::numbers::pi;

double guarded_difference(const ScatteringGeometry& g, double forward_exclusion) {
  const double d = reduce_signed_angle(g.theta - g.theta0);
  if (std::abs(d) < forward_exclusion)
    throw forward_singularity_error(
        "cross section is singular in the forward direction theta = theta0");
  return d;
}

}  // namespace

double dcs_pure_ab(FluxAlpha alpha, double k, const ScatteringGeometry& g,
                   double forward_exclusion) {
  const double d = guarded_difference(g, forward_exclusion);
  const double sin_a = std::sin(pi * alpha.value());
  const double half_sin = std::sin(d / 2.0);
  return sin_a * sin_a / (2.0 * pi * k * half_sin * half_sin);
}

double dcs_uv_zero(FluxAlpha alpha, double k, const PolarW& w,
                   const ScatteringGeometry& g, double forward_exclusion) {
  const double d = guarded_difference(g, forward_exclusion);
  const double sin_a = std::sin(pi * alpha.value());
  const double half_sin = std::sin(d / 2.0);
  const double rho2 = w.rho * w.rho;
  const double shell = 8.0 * rho2 / ((1.0 + rho2) * (1.0 + rho2));
  const double correction =
      shell * (std::cos(g.theta + g.theta0 + 2.0 * w.varphi) - std::cos(d) * rho2);
  return sin_a * sin_a / (2.0 * pi * k) *
         (1.0 / (half_sin * half_sin) + correction);
}

double dcs_w_infinity(FluxAlpha alpha, double k, const ScatteringGeometry& g,
                      double forward_exclusion) {
  const double d = guarded_difference(g, forward_exclusion);
  const double sin_a = std::sin(pi * alpha.value());
  const double half_sin = std::sin(d / 2.0);
  const double lobe = 1.0 - 2.0 * std::cos(d);
  return sin_a * sin_a * lobe * lobe / (2.0 * pi * k * half_sin * half_sin);
}

std::string_view w_infinity_limit_note() noexcept {
  return "limit curve for |w| -> infinity at u = v = 0; reached either at "
         "fixed boundary parameters as the energy grows, or at fixed energy "
         "as |w'| -> infinity, which forces both subdominant boundary "
         "coefficients of the wave function at the origin to vanish";
}

double dcs_uvw_equal(FluxAlpha alpha, double k, double u,
                     const ScatteringGeometry& g, double forward_exclusion) {
  if (!(u > 0) || !std::isfinite(u))
    throw std::domain_error("dcs_uvw_equal: u must be positive and finite");
  const double d = guarded_difference(g, forward_exclusion);
  const double sin_a = std::sin(pi * alpha.value());
  const double half_sin = std::sin(d / 2.0);
  const double swing =
      std::sin(g.theta) - std::sin(g.theta0) - std::sin(pi * alpha.value() - d);
  const double numerator = 1.0 + 4.0 * swing * swing * u * u;
  const double denominator = 1.0 + 4.0 * sin_a * sin_a * u * u;
  return sin_a * sin_a / (2.0 * pi * k * half_sin * half_sin) * numerator /
         denominator;
}

double dcs_difference_uvw(FluxAlpha alpha, double k, double u,
                          const ScatteringGeometry& g,
                          double forward_exclusion) {
  const double d = guarded_difference(g, forward_exclusion);
  const double a = pi * alpha.value();
  const std::complex<double> phase = unit_phase(a);
  const double sin_a = phase.imag();
  const double cos_a = phase.real();
  const double prefactor =
      sin_a * sin_a * u * u / (pi * k * (1.0 + 4.0 * sin_a * sin_a * u * u));

  // Smooth angular factor of the difference; its mean over the circle is
  // 8 cos(pi a)(cos(pi a) + cos(theta0)), which is what survives integration.
  const double smooth = 8.0 * cos_a * (cos_a + std::cos(g.theta0)) +
                        8.0 * std::cos(a - g.theta) +
                        4.0 * std::cos(2.0 * a - d) +
                        4.0 * std::cos(g.theta + g.theta0);
  // Odd simple-pole part about theta0; principal-value null by symmetry.
  const double pole_strength = 8.0 * sin_a * (cos_a + std::cos(g.theta0));
  const double pole = pole_strength * std::cos(d / 2.0) / std::sin(d / 2.0);

  return prefactor * (smooth - pole);
}

double dcs_w_zero(FluxAlpha alpha, double k, double u, double v,
                  const ScatteringGeometry& g, double forward_exclusion) {
  const double d = guarded_difference(g, forward_exclusion);
  const double a = pi * alpha.value();
  const std::complex<double> phase = unit_phase(a);
  const double sin_a = phase.imag();
  const double cos_a = phase.real();
  const double half_sin = std::sin(d / 2.0);

  const std::complex<double> rotated = unit_phase(a - d);
  const double cos_ad = rotated.real();
  const double sin_ad = rotated.imag();
  const double cos_d = std::cos(d);
  const double uv = u * v;
  const double coupling =
      (1.0 + u * u) * (1.0 + v * v) + 4.0 * uv * sin_ad * sin_ad +
      4.0 * uv * uv * cos_d * cos_d - 2.0 * (u - v) * (1.0 + uv) * cos_ad -
      4.0 * uv * (1.0 + uv) * cos_d + 4.0 * (u - v) * uv * cos_ad * cos_d;

  // (1 + u^2 - 2u cos a) and (1 + v^2 + 2v cos a) in completed-square form:
  // bounded below by sin^2(a), no cancellation near u ~ cos a.
  const double den_u = (u - cos_a) * (u - cos_a) + sin_a * sin_a;
  const double den_v = (v + cos_a) * (v + cos_a) + sin_a * sin_a;

  return sin_a * sin_a * coupling /
         (2.0 * pi * k * half_sin * half_sin * den_u * den_v);
}

double dcs_uv_equal_alpha_half(double k, double u, const ScatteringGeometry& g,
                               double forward_exclusion) {
  const double d = guarded_difference(g, forward_exclusion);
  const double half_sin = std::sin(d / 2.0);
  const double lobe = 1.0 - 2.0 * std::cos(d);
  return (1.0 + u * u * lobe * lobe) /
         (2.0 * pi * k * (1.0 + u * u) * half_sin * half_sin);
}

}  // namespace abscat
