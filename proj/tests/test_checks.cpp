#include <doctest.h>

#include "abscat/checks.hpp"

using namespace abscat;

namespace {

const std::vector<CheckKind> kAll{
    CheckKind::integral_uv_zero, CheckKind::integral_uvw_equal,
    CheckKind::oracle_equivalence, CheckKind::symmetry_laws};

}  // namespace

TEST_CASE("token mapping") {
  CHECK(check_from_token("eq13") == CheckKind::integral_uv_zero);
  CHECK(check_from_token("eq19") == CheckKind::integral_uvw_equal);
  CHECK(check_from_token("oracle") == CheckKind::oracle_equivalence);
  CHECK(check_from_token("symmetry") == CheckKind::symmetry_laws);
  CHECK_FALSE(check_from_token("nonsense").has_value());
  for (CheckKind kind : kAll)
    CHECK(check_from_token(check_token(kind)) == kind);
}

TEST_CASE("all suites pass at moderate trial counts") {
  const auto results = run_checks(kAll, 2024, 300);
  REQUIRE(results.size() == 6);  // symmetry expands into three sub-suites
  for (const auto& r : results) {
    INFO(r.name, " max residual ", r.max_residual, " tolerance ", r.tolerance);
    CHECK(r.pass);
    CHECK(r.failures.empty());
    CHECK(r.trials == 300);
  }
  CHECK(all_passed(results));
}

TEST_CASE("results are deterministic in the seed and policy-independent") {
  const auto a = run_checks(kAll, 99, 100, ExecutionPolicy::parallel);
  const auto b = run_checks(kAll, 99, 100, ExecutionPolicy::serial);
  const auto c = run_checks(kAll, 100, 100, ExecutionPolicy::parallel);
  REQUIRE(a.size() == b.size());
  bool any_seed_sensitivity = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].max_residual == b[i].max_residual);
    CHECK(a[i].name == b[i].name);
    any_seed_sensitivity |= a[i].max_residual != c[i].max_residual;
  }
  CHECK(any_seed_sensitivity);
}

TEST_CASE("report JSON carries the verdict") {
  const auto results = run_checks({CheckKind::integral_uv_zero}, 7, 20);
  const std::string report = checks_report_json(results, 7);
  CHECK(report.find("\"name\": \"eq13\"") != std::string::npos);
  CHECK(report.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("trials must be positive") {
  CHECK_THROWS_AS(run_checks(kAll, 1, 0), std::invalid_argument);
}
