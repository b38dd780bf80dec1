// Closed-form cross sections for the parameter slices that admit them.
// Each one is tested against dcs_general restricted to its slice.
#pragma once

#include <complex>
#include <string_view>

#include "abscat/params.hpp"
#include "abscat/smatrix.hpp"

namespace abscat {

/// w in polar form, w = rho * exp(i*varphi), rho >= 0.
struct PolarW {
  double rho = 0;
  double varphi = 0;

  std::complex<double> value() const { return std::polar(rho, varphi); }
};

/// Regular boundary condition (u = v = w = 0):
///   sin^2(pi a) / (2 pi k sin^2((theta - theta0)/2)).
double dcs_pure_ab(FluxAlpha alpha, double k, const ScatteringGeometry& g,
                   double forward_exclusion = kForwardExclusionDefault);

/// u = v = 0, w = rho e^{i phi}.
double dcs_uv_zero(FluxAlpha alpha, double k, const PolarW& w,
                   const ScatteringGeometry& g,
                   double forward_exclusion = kForwardExclusionDefault);

/// Pointwise limit of dcs_uv_zero as rho -> infinity:
///   sin^2(pi a) (1 - 2 cos(theta - theta0))^2 / (2 pi k sin^2(.../2)).
double dcs_w_infinity(FluxAlpha alpha, double k, const ScatteringGeometry& g,
                      double forward_exclusion = kForwardExclusionDefault);

/// Reading of the rho -> infinity limit, echoed in sweep output headers.
std::string_view w_infinity_limit_note() noexcept;

/// u = v = w = u0 > 0 (real), where uv - |w|^2 = 0. Not a function of
/// theta - theta0 alone: this slice breaks rotational symmetry.
double dcs_uvw_equal(FluxAlpha alpha, double k, double u,
                     const ScatteringGeometry& g,
                     double forward_exclusion = kForwardExclusionDefault);

/// dcs_uvw_equal - dcs_pure_ab in cancellation-free form: a smooth
/// angular factor minus an odd simple-pole term whose principal-value
/// integral about theta0 vanishes. May be negative.
double dcs_difference_uvw(FluxAlpha alpha, double k, double u,
                          const ScatteringGeometry& g,
                          double forward_exclusion = kForwardExclusionDefault);

/// w = 0 (conserved angular momentum). Denominator factors are evaluated
/// in completed-square form, (u -+ cos(pi a))^2 + sin^2(pi a), so they are
/// bounded below by sin^2(pi a) with no cancellation.
double dcs_w_zero(FluxAlpha alpha, double k, double u, double v,
                  const ScatteringGeometry& g,
                  double forward_exclusion = kForwardExclusionDefault);

/// u = v, alpha = 1/2 specialization of dcs_w_zero:
///   (1 + u^2 (1 - 2 cos(theta-theta0))^2) / (2 pi k (1+u^2) sin^2(.../2)).
double dcs_uv_equal_alpha_half(double k, double u, const ScatteringGeometry& g,
                               double forward_exclusion = kForwardExclusionDefault);

}  // namespace abscat
