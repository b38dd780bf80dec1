#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "abscat/errors.hpp"
#include "abscat/params.hpp"
#include "oracle_gamma.hpp"

using namespace abscat;
using std::numbers::pi;

namespace {

PhysicalInput input_with_ratio(double ratio) {
  // Choose flux so that -e*phi/(2 pi hbar c) equals the requested ratio.
  PhysicalInput p;
  p.mass = 1;
  p.energy = 1;
  p.charge = -1;
  p.hbar = 1;
  p.c_light = 1;
  p.flux = ratio * 2 * pi;
  return p;
}

}  // namespace

TEST_CASE("reduce_flux maps the raw ratio into (0,1)") {
  CHECK(reduce_flux(input_with_ratio(0.5)).value() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(reduce_flux(input_with_ratio(2.25)).value() == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(reduce_flux(input_with_ratio(-0.25)).value() == doctest::Approx(0.75).epsilon(1e-15));
  CHECK_THROWS_AS(reduce_flux(input_with_ratio(3.0)), integer_flux_error);
  CHECK_THROWS_AS(reduce_flux(input_with_ratio(0.0)), integer_flux_error);

  PhysicalInput p = input_with_ratio(0.5);
  p.charge = 0;
  CHECK_THROWS_AS(reduce_flux(p), std::domain_error);
}

TEST_CASE("reduce_flux is gauge-periodic in the flux quantum") {
  std::mt19937_64 eng(11);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  for (int t = 0; t < 200; ++t) {
    PhysicalInput p;
    p.mass = 1;
    p.energy = 1;
    p.charge = 0.5 + std::abs(dist(eng)) / 10;
    p.hbar = 0.5 + std::abs(dist(eng)) / 10;
    p.c_light = 0.5 + std::abs(dist(eng)) / 10;
    p.flux = dist(eng);
    const double quantum = 2 * pi * p.hbar * p.c_light / p.charge;

    double base;
    try {
      base = reduce_flux(p).value();
    } catch (const integer_flux_error&) {
      continue;
    }
    for (int n = -3; n <= 3; ++n) {
      PhysicalInput shifted = p;
      shifted.flux = p.flux + n * quantum;
      CHECK(reduce_flux(shifted).value() == doctest::Approx(base).epsilon(1e-12));
    }
  }
}

TEST_CASE("wavenumber") {
  PhysicalInput p;
  p.mass = 1;
  p.energy = 0.5;
  p.hbar = 1;
  CHECK(wavenumber(p) == doctest::Approx(1.0));
  p.mass = 2;
  p.energy = 1;
  CHECK(wavenumber(p) == doctest::Approx(2.0));
  p.energy = -1;
  CHECK_THROWS_AS(wavenumber(p), std::domain_error);
  p.energy = 1;
  p.mass = 0;
  CHECK_THROWS_AS(wavenumber(p), std::domain_error);
}

TEST_CASE("gamma_fn against pinned values and the reference oracle") {
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_fn(2.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_fn(0.5) == doctest::Approx(1.7724538509055160).epsilon(1e-14));
  // frozen from the long-double series oracle
  CHECK(gamma_fn(1.75) == doctest::Approx(0.91906252684888324).epsilon(1e-14));
  CHECK(gamma_fn(0.25) == doctest::Approx(3.6256099082219083).epsilon(1e-14));

  for (int i = 1; i < 250; ++i) {
    const double x = i / 100.0;
    const double expected = static_cast<double>(abscat_test::gamma_reference(x));
    CHECK(std::abs(gamma_fn(x) - expected) <= 1e-13 * expected);
  }
  // domain edges
  for (double x : {1e-9, 1e-6, 1e-3, 2.4999, 2.4999999}) {
    const double expected = static_cast<double>(abscat_test::gamma_reference(x));
    CHECK(std::abs(gamma_fn(x) - expected) <= 1e-13 * expected);
  }

  CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
  CHECK_THROWS_AS(gamma_fn(2.5), std::domain_error);
  CHECK_THROWS_AS(gamma_fn(-1.0), std::domain_error);
}

TEST_CASE("gamma_fn satisfies the reflection identity on (0,1)") {
  for (int i = 1; i < 100; ++i) {
    const double x = i / 100.0;
    const double product = gamma_fn(x) * gamma_fn(1.0 - x) * std::sin(pi * x) / pi;
    CHECK(product == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("rescale reproduces the dimensionless parameters") {
  SUBCASE("alpha = 1/2, k = 2: both gamma ratios equal 2") {
    const auto ep = rescale({1.0, 1.0, {1.0, 0.0}}, FluxAlpha{0.5}, 2.0);
    CHECK(ep.u == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(ep.v == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(ep.w == std::complex<double>{1.0, 0.0});
    CHECK(ep.k == 2.0);

    const auto scaled = rescale({3.0, -7.0, {0, 0}}, FluxAlpha{0.5}, 2.0);
    CHECK(scaled.u / 3.0 == doctest::Approx(scaled.v / -7.0).epsilon(1e-15));
  }

  SUBCASE("zeros map to zeros, w = (k/2) w'") {
    const auto ep = rescale({0.0, 0.0, {3.0, 0.0}}, FluxAlpha{0.5}, 2.0);
    CHECK(ep.u == 0.0);
    CHECK(ep.v == 0.0);
    CHECK(ep.w == std::complex<double>{3.0, 0.0});
  }

  SUBCASE("alpha = 1/4 gamma ratio, frozen from the oracle") {
    const auto ep = rescale({1.0, 0.0, {0, 0}}, FluxAlpha{0.25}, 2.0);
    CHECK(ep.u == doctest::Approx(3.9449001589181852).epsilon(1e-13));
  }

  SUBCASE("rescale is linear in each primed parameter") {
    std::mt19937_64 eng(5);
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    for (int t = 0; t < 100; ++t) {
      const FluxAlpha alpha{0.01 + 0.98 * (t + 0.5) / 100};
      const double k = 0.25 + 0.1 * t;
      const BoundaryCondition bc{dist(eng), dist(eng), {dist(eng), dist(eng)}};
      const double scale = dist(eng);
      const auto base = rescale(bc, alpha, k);
      const auto scaled = rescale(
          {scale * bc.u_prime, scale * bc.v_prime, scale * bc.w_prime}, alpha, k);
      CHECK(scaled.u == doctest::Approx(scale * base.u).epsilon(1e-14));
      CHECK(scaled.v == doctest::Approx(scale * base.v).epsilon(1e-14));
      CHECK(std::abs(scaled.w - scale * base.w) <=
            1e-14 * std::abs(scale * base.w) + 1e-300);
    }
  }

  SUBCASE("inverting the rescale recovers the primed parameters") {
    const BoundaryCondition bc{1.7, -0.3, {0.2, -2.5}};
    const FluxAlpha alpha{0.37};
    const double k = 1.9;
    const auto ep = rescale(bc, alpha, k);
    const double a = alpha.value();
    const double u_back =
        ep.u * gamma_fn(2 - a) / gamma_fn(a) / std::pow(k / 2, 2 - 2 * a);
    const double v_back =
        ep.v * gamma_fn(1 + a) / gamma_fn(1 - a) / std::pow(k / 2, 2 * a);
    CHECK(u_back == doctest::Approx(bc.u_prime).epsilon(1e-14));
    CHECK(v_back == doctest::Approx(bc.v_prime).epsilon(1e-14));
    CHECK(std::abs(ep.w / (k / 2) - bc.w_prime) <= 1e-15);
  }
}

TEST_CASE("domain type invariants") {
  CHECK_THROWS_AS(FluxAlpha{0.0}, std::domain_error);
  CHECK_THROWS_AS(FluxAlpha{1.0}, std::domain_error);
  CHECK_THROWS_AS(FluxAlpha{-0.2}, std::domain_error);
  CHECK_NOTHROW(FluxAlpha{1e-12});
  CHECK_THROWS_AS(EffectiveParams(0, 0, {0, 0}, FluxAlpha{0.5}, 0.0),
                  std::domain_error);
  CHECK_THROWS_AS(EffectiveParams(1.0 / 0.0, 0, {0, 0}, FluxAlpha{0.5}, 1.0),
                  std::domain_error);
  CHECK_THROWS_AS(rescale({1, 1, {0, 0}}, FluxAlpha{0.5}, -2.0),
                  std::domain_error);
}

TEST_CASE("effective_from_physical front door") {
  PhysicalInput p = input_with_ratio(0.5);
  p.mass = 2;
  p.energy = 1;  // k = 2
  const auto ep = effective_from_physical(p, {1.0, 1.0, {1.0, 0.0}});
  CHECK(ep.alpha.value() == doctest::Approx(0.5));
  CHECK(ep.k == doctest::Approx(2.0));
  CHECK(ep.u == doctest::Approx(2.0).epsilon(1e-13));
}
