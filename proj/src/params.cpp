#include "abscat/params.hpp"

#include <cmath>
#include <numbers>

#include "abscat/errors.hpp"

namespace abscat {

namespace {

void require_finite_positive(double x, const char* what) {
  if (!(x > 0) || !std::isfinite(x))
    throw std::domain_error(std::string(what) + " must be positive and finite");
}

// Lanczos rational approximation, N = 13, g = 6.024680040776729583740234375.
// Numerator/denominator coefficients in ascending powers; the denominator
// is the rising factorial z(z+1)...(z+11). Max error ~1.2e-17 relative.
constexpr double kLanczosG = 6.024680040776729583740234375;

constexpr double kLanczosNum[13] = {
    23531376880.410759688572007674451636754734846804940,
    42919803642.649098768957899047001988850926355848959,
    35711959237.355668049440185451547166705960488635843,
    17921034426.037209699919755754458931112671403265390,
    6039542586.3520280050642916443072979210699388420708,
    1439720407.3117216736632230727949368067972674615217,
    248874557.86205415651146038641322942321632125127801,
    31426415.585400194380614231628318205362874684987640,
    2876370.6289353724412254090516208496135991145378768,
    186056.26539522349504029498971604569928220784236328,
    8071.6720023658162106380029022722506138218516325024,
    210.82427775157934587250973392071336271166969580291,
    2.5066282746310002701649081771338373386264310793408,
};

constexpr double kLanczosDen[13] = {
    0, 39916800, 120543840, 150917976, 105258076, 45995730,
    13339535, 2637558, 357423, 32670, 1925, 66, 1,
};

double lanczos_sum(double z) {
  double num = 0, den = 0;
  for (int i = 12; i >= 0; --i) {
    num = num * z + kLanczosNum[i];
    den = den * z + kLanczosDen[i];
  }
  return num / den;
}

double gamma_lanczos(double x) {
  // Valid for x >= 0.5; callers shift smaller arguments up by recurrence.
  const double t = x + kLanczosG - 0.5;
  return lanczos_sum(x) * std::pow(t, x - 0.5) * std::exp(-t);
}

}  // namespace

FluxAlpha::FluxAlpha(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0) || !std::isfinite(alpha))
    throw std::domain_error("FluxAlpha: alpha must lie strictly in (0, 1)");
}

EffectiveParams::EffectiveParams(double u_, double v_, std::complex<double> w_,
                                 FluxAlpha alpha_, double k_)
    : u(u_), v(v_), w(w_), alpha(alpha_), k(k_) {
  if (!std::isfinite(u) || !std::isfinite(v) || !std::isfinite(w.real()) ||
      !std::isfinite(w.imag()))
    throw std::domain_error("EffectiveParams: parameters must be finite");
  require_finite_positive(k, "EffectiveParams: k");
}

FluxAlpha reduce_flux(const PhysicalInput& p) {
  require_finite_positive(p.hbar, "hbar");
  require_finite_positive(p.c_light, "c");
  if (p.charge == 0 || !std::isfinite(p.charge))
    throw std::domain_error("reduce_flux: charge must be nonzero and finite");
  if (!std::isfinite(p.flux))
    throw std::domain_error("reduce_flux: flux must be finite");

  const double raw = -p.charge * p.flux / (2.0 * std::numbers::pi * p.hbar * p.c_light);
  const double alpha = raw - std::floor(raw);
  if (alpha == 0.0)
    throw integer_flux_error(
        "reduce_flux: flux is an integer number of quanta (alpha = 0)");
  return FluxAlpha(alpha);
}

double wavenumber(const PhysicalInput& p) {
  require_finite_positive(p.mass, "mass");
  require_finite_positive(p.energy, "energy");
  require_finite_positive(p.hbar, "hbar");
  return std::sqrt(2.0 * p.mass * p.energy) / p.hbar;
}

double gamma_fn(double x) {
  if (!(x > 0.0) || !(x < 2.5))
    throw std::domain_error("gamma_fn: argument must lie in (0, 2.5)");
  if (x < 0.5) return gamma_lanczos(x + 1.0) / x;
  return gamma_lanczos(x);
}

EffectiveParams rescale(const BoundaryCondition& bc, FluxAlpha alpha, double k) {
  require_finite_positive(k, "rescale: k");
  const double a = alpha.value();
  const double half_k = k / 2.0;
  const double u = gamma_fn(a) / gamma_fn(2.0 - a) *
                   std::pow(half_k, 2.0 - 2.0 * a) * bc.u_prime;
  const double v = gamma_fn(1.0 - a) / gamma_fn(1.0 + a) *
                   std::pow(half_k, 2.0 * a) * bc.v_prime;
  const std::complex<double> w = half_k * bc.w_prime;
  return EffectiveParams(u, v, w, alpha, k);
}

EffectiveParams effective_from_physical(const PhysicalInput& p,
                                        const BoundaryCondition& bc) {
  return rescale(bc, reduce_flux(p), wavenumber(p));
}

}  // namespace abscat
