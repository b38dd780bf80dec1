// Sampled cross-section curves: shape classification and CSV/JSON encoding.
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace abscat {

/// One sampled curve of 2*pi*|S|^2 against the plotting angle
/// Theta = theta - theta0 + pi (mod 2pi), Theta in (-pi, pi).
/// Theta = 0 is backward scattering, Theta = +-pi forward.
struct CrossSectionCurve {
  std::vector<std::pair<std::string, std::string>> metadata;  // ordered echo
  std::vector<double> theta_big;  ///< strictly increasing Theta grid
  std::vector<double> values;     ///< finite, >= 0, same length as theta_big
  double theta0 = 0;              ///< incidence angle this curve was cut at
};

/// A sweep's worth of curves. surface = true marks a (Theta, theta0) grid
/// that is emitted as a single three-column table.
struct SweepResult {
  std::vector<CrossSectionCurve> curves;
  bool surface = false;
};

enum class CurveShape { one_minimum, two_minima_one_maximum, other };

const char* to_string(CurveShape s) noexcept;

/// Count strict interior local extrema of the sampled values after
/// collapsing plateaus at 1e-12 relative. Requires >= 256 samples
/// (throws std::invalid_argument otherwise).
CurveShape classify_shape(const CrossSectionCurve& curve);

/// CSV with `# key=value` header lines per curve block, a column-name line,
/// then data rows at 17 significant digits, LF line endings. Surface results
/// emit one block with `Theta,theta0,value` rows.
std::string to_csv(const SweepResult& result);

/// JSON mirror of the CSV content (ordered keys, round-trip doubles).
std::string to_json(const SweepResult& result);

/// Parse to_csv output back into curves; numeric fields are recovered
/// exactly at the emitted precision. Throws std::invalid_argument on
/// malformed input.
SweepResult parse_csv(const std::string& text);

}  // namespace abscat
