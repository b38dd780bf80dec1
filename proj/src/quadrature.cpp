#include "abscat/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace abscat {

namespace {

using std::numbers::pi;

}  // namespace

double integrated_difference_uvw(FluxAlpha alpha, double k, double u,
                                 double theta0) {
  if (!(k > 0) || !std::isfinite(k))
    throw std::domain_error("integrated_difference_uvw: k must be positive");
  const double a = pi * alpha.value();
  const std::complex<double> phase = unit_phase(a);
  const double sin_a = phase.imag();
  const double cos_a = phase.real();
  return 16.0 * sin_a * sin_a * cos_a * (cos_a + std::cos(theta0)) * u * u /
         (k * (1.0 + 4.0 * sin_a * sin_a * u * u));
}

IdentityReport check_integral_identity_uv_zero(FluxAlpha alpha, double k,
                                               const PolarW& w,
                                               const PeriodicGrid& grid) {
  detail::validate(grid);
  // Integrand is the analytically cancelled correction term of the
  // u = v = 0 cross section: the divergent parts of the two cross sections
  // are identical and never evaluated separately.
  const double sin_a = std::sin(pi * alpha.value());
  const double rho2 = w.rho * w.rho;
  const double shell = 8.0 * rho2 / ((1.0 + rho2) * (1.0 + rho2));
  const double front = sin_a * sin_a / (2.0 * pi * k);
  const auto integrand = [&](double theta) {
    return front * shell *
           (std::cos(theta + grid.theta0 + 2.0 * w.varphi) -
            std::cos(theta - grid.theta0) * rho2);
  };

  IdentityReport report;
  const double h = kTwoPi / grid.n;
  double acc = 0, scale = 0;
  for (int j = 0; j < grid.n; ++j) {
    const double y = integrand(grid.theta0 + (j + 0.5) * h);
    detail::require_finite(y);
    acc += y;
    scale = std::max(scale, std::abs(y));
  }
  report.value = acc * h;
  report.reference = 0.0;
  report.residual = std::abs(report.value);
  report.scale = scale;
  report.tolerance = 1e-10 * std::max(1.0, scale);
  report.pass = report.residual <= report.tolerance;
  return report;
}

IdentityReport check_integral_identity_uvw_equal(FluxAlpha alpha, double k,
                                                 double u, double theta0,
                                                 const PeriodicGrid& grid) {
  detail::validate(grid);
  PeriodicGrid centered = grid;
  centered.theta0 = theta0;

  double scale = 0;
  const auto integrand = [&](double theta) {
    const ScatteringGeometry g{theta, theta0};
    const double y = dcs_uvw_equal(alpha, k, u, g) - dcs_pure_ab(alpha, k, g);
    scale = std::max(scale, std::abs(y));
    return y;
  };

  IdentityReport report;
  report.value = integrate_pv_symmetric(integrand, centered);
  report.reference = integrated_difference_uvw(alpha, k, u, theta0);
  report.residual = std::abs(report.value - report.reference);
  report.scale = scale;
  report.tolerance = std::max(1e-7 * std::abs(report.reference), 1e-10);
  report.pass = report.residual <= report.tolerance;
  return report;
}

}  // namespace abscat
