// Seeded randomized verification suites: the two integral identities, the
// dual-route cross-section equivalence, and the symmetry laws. The CLI
// exposes them behind --check; the acceptance tests reuse them directly.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abscat/sweep.hpp"

namespace abscat {

enum class CheckKind {
  integral_uv_zero,    ///< token "eq13": vanishing integrated difference
  integral_uvw_equal,  ///< token "eq19": principal-value integral vs closed form
  oracle_equivalence,  ///< token "oracle": dcs_general vs dcs_from_smatrix
  symmetry_laws,       ///< token "symmetry": rotation, phase covariance, forward law
};

std::optional<CheckKind> check_from_token(std::string_view token);
std::string_view check_token(CheckKind kind) noexcept;

struct CheckResult {
  std::string name;          ///< token, possibly with a sub-suite suffix
  std::uint64_t seed = 0;
  int trials = 0;
  bool pass = false;
  double max_residual = 0;   ///< worst residual seen, in the suite's own measure
  double tolerance = 0;      ///< threshold max_residual is held against
  std::vector<std::string> failures;  ///< formatted failing tuples, if any
};

/// Run the selected suites with a deterministic generator. symmetry_laws
/// expands into three results (rotation / phase / forward). trials >= 1.
std::vector<CheckResult> run_checks(const std::vector<CheckKind>& kinds,
                                    std::uint64_t seed, int trials,
                                    ExecutionPolicy policy = ExecutionPolicy::parallel);

/// Machine-readable report; overall "pass" is the conjunction.
std::string checks_report_json(const std::vector<CheckResult>& results,
                               std::uint64_t seed);

bool all_passed(const std::vector<CheckResult>& results) noexcept;

}  // namespace abscat
