// Physical inputs, flux reduction, wavenumber, and the momentum-dependent
// rescaling of the boundary-condition parameters.
#pragma once

#include <complex>

namespace abscat {

/// Raw physical data of the scattering problem. The fundamental constants
/// are caller-supplied so that any consistent unit system works.
struct PhysicalInput {
  double mass = 0;     ///< particle mass, > 0
  double charge = 0;   ///< particle charge, != 0 for flux reduction
  double energy = 0;   ///< kinetic energy, > 0
  double flux = 0;     ///< magnetic flux through the solenoid
  double hbar = 1;     ///< reduced Planck constant, > 0
  double c_light = 1;  ///< speed of light, > 0
};

/// Reduced flux parameter, constrained to the open interval (0, 1).
class FluxAlpha {
 public:
  /// Throws std::domain_error unless 0 < alpha < 1.
  explicit FluxAlpha(double alpha);

  double value() const noexcept { return alpha_; }

 private:
  double alpha_;
};

/// The three boundary-condition parameters selecting a self-adjoint
/// extension: u' and v' real, w' complex. All values are finite but
/// otherwise unconstrained; u' = v' = w' = 0 is the regular (pure AB) case.
struct BoundaryCondition {
  double u_prime = 0;
  double v_prime = 0;
  std::complex<double> w_prime{0, 0};
};

/// Dimensionless parameters (u, v, w) at a fixed wavenumber k, together
/// with the flux parameter. Every cross-section formula consumes these.
struct EffectiveParams {
  double u;
  double v;
  std::complex<double> w;
  FluxAlpha alpha;
  double k;

  /// Throws std::domain_error for non-finite entries or k <= 0.
  EffectiveParams(double u, double v, std::complex<double> w, FluxAlpha alpha,
                  double k);
};

/// Reduce -e*phi/(2*pi*hbar*c) modulo 1 into (0, 1).
/// Throws integer_flux_error when the reduction lands exactly on 0
/// (integer number of flux quanta), std::domain_error on invalid inputs.
FluxAlpha reduce_flux(const PhysicalInput& p);

/// k = sqrt(2*m*E)/hbar. Throws std::domain_error on non-positive m, E or hbar.
double wavenumber(const PhysicalInput& p);

/// Gamma function on (0, 2.5), the domain needed by rescale().
/// Lanczos rational approximation, relative error below 1e-13 everywhere
/// on the domain. Throws std::domain_error outside it.
double gamma_fn(double x);

/// Map (u', v', w') to the dimensionless (u, v, w) at wavenumber k:
///   u = Gamma(a)/Gamma(2-a) * (k/2)^(2-2a) * u'
///   v = Gamma(1-a)/Gamma(1+a) * (k/2)^(2a) * v'
///   w = (k/2) * w'
EffectiveParams rescale(const BoundaryCondition& bc, FluxAlpha alpha, double k);

/// Convenience front door: flux reduction + wavenumber + rescale in one step.
EffectiveParams effective_from_physical(const PhysicalInput& p,
                                        const BoundaryCondition& bc);

}  // namespace abscat
