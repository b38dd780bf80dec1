#include "abscat/curve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "abscat/textio.hpp"

namespace abscat {

namespace {

constexpr double kPlateauRelTol = 1e-12;

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

const std::string* find_meta(const CrossSectionCurve& curve,
                             const std::string& key) {
  for (const auto& [k, v] : curve.metadata)
    if (k == key) return &v;
  return nullptr;
}

}  // namespace

const char* to_string(CurveShape s) noexcept {
  switch (s) {
    case CurveShape::one_minimum: return "one_minimum";
    case CurveShape::two_minima_one_maximum: return "two_minima_one_maximum";
    case CurveShape::other: return "other";
  }
  return "other";
}

CurveShape classify_shape(const CrossSectionCurve& curve) {
  if (curve.values.size() < 256)
    throw std::invalid_argument(
        "classify_shape: need at least 256 samples for a stable extremum count");

  // Collapse plateaus so that symmetric grids do not split an extremum in two.
  std::vector<double> v;
  v.reserve(curve.values.size());
  for (double y : curve.values) {
    if (!v.empty() &&
        std::abs(y - v.back()) <=
            kPlateauRelTol * std::max({std::abs(y), std::abs(v.back()), 1.0}))
      continue;
    v.push_back(y);
  }

  int minima = 0, maxima = 0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    if (v[i] < v[i - 1] && v[i] < v[i + 1]) ++minima;
    if (v[i] > v[i - 1] && v[i] > v[i + 1]) ++maxima;
  }
  if (minima == 1 && maxima == 0) return CurveShape::one_minimum;
  if (minima == 2 && maxima == 1) return CurveShape::two_minima_one_maximum;
  return CurveShape::other;
}

std::string to_csv(const SweepResult& result) {
  std::string out;
  if (result.curves.empty()) return out;

  if (result.surface) {
    const CrossSectionCurve& first = result.curves.front();
    for (const auto& [key, value] : first.metadata) {
      if (key == "theta0" || key == "curve") continue;
      out += "# " + key + "=" + value + "\n";
    }
    out += "# theta0_lo=" + format_sig17(result.curves.front().theta0) + "\n";
    out += "# theta0_hi=" + format_sig17(result.curves.back().theta0) + "\n";
    out += "# theta0_count=" + std::to_string(result.curves.size()) + "\n";
    out += "Theta,theta0,value\n";
    for (const auto& curve : result.curves) {
      const std::string theta0 = format_sig17(curve.theta0);
      for (std::size_t i = 0; i < curve.theta_big.size(); ++i)
        out += format_sig17(curve.theta_big[i]) + "," + theta0 + "," +
               format_sig17(curve.values[i]) + "\n";
    }
    return out;
  }

  bool first_block = true;
  for (const auto& curve : result.curves) {
    if (!first_block) out += "\n";
    first_block = false;
    for (const auto& [key, value] : curve.metadata)
      out += "# " + key + "=" + value + "\n";
    out += "Theta,value\n";
    for (std::size_t i = 0; i < curve.theta_big.size(); ++i)
      out += format_sig17(curve.theta_big[i]) + "," +
             format_sig17(curve.values[i]) + "\n";
  }
  return out;
}

std::string to_json(const SweepResult& result) {
  nlohmann::ordered_json root;
  root["surface"] = result.surface;
  nlohmann::ordered_json curves = nlohmann::ordered_json::array();
  for (const auto& curve : result.curves) {
    nlohmann::ordered_json c;
    nlohmann::ordered_json meta;
    for (const auto& [key, value] : curve.metadata) meta[key] = value;
    c["metadata"] = std::move(meta);
    c["theta0"] = curve.theta0;
    c["Theta"] = curve.theta_big;
    c["values"] = curve.values;
    curves.push_back(std::move(c));
  }
  root["curves"] = std::move(curves);
  return root.dump(2) + "\n";
}

SweepResult parse_csv(const std::string& text) {
  SweepResult result;
  CrossSectionCurve current;
  bool in_block = false;
  bool surface_columns = false;
  bool have_surface_theta0 = false;
  double surface_theta0 = 0;

  const auto flush = [&]() {
    if (!in_block) return;
    if (!surface_columns) {
      if (const std::string* t0 = find_meta(current, "theta0"))
        current.theta0 = parse_double(*t0);
      result.curves.push_back(std::move(current));
    } else if (!current.theta_big.empty()) {
      current.theta0 = surface_theta0;
      result.curves.push_back(std::move(current));
    }
    current = CrossSectionCurve{};
    in_block = false;
    have_surface_theta0 = false;
  };

  std::istringstream stream(text);
  std::string line;
  std::vector<std::pair<std::string, std::string>> block_meta;
  while (std::getline(stream, line)) {
    if (line.empty()) {
      flush();
      block_meta.clear();
      surface_columns = false;
      continue;
    }
    if (line.rfind("# ", 0) == 0) {
      const std::size_t eq = line.find('=', 2);
      if (eq == std::string::npos)
        throw std::invalid_argument("parse_csv: malformed header line: " + line);
      block_meta.emplace_back(line.substr(2, eq - 2), line.substr(eq + 1));
      continue;
    }
    if (line == "Theta,value" || line == "Theta,theta0,value") {
      surface_columns = (line == "Theta,theta0,value");
      result.surface = result.surface || surface_columns;
      in_block = true;
      current.metadata = block_meta;
      continue;
    }
    const auto fields = split(line, ',');
    if (!in_block || fields.size() != (surface_columns ? 3u : 2u))
      throw std::invalid_argument("parse_csv: unexpected row: " + line);
    const double theta = parse_double(fields[0]);
    if (surface_columns) {
      const double theta0 = parse_double(fields[1]);
      if (have_surface_theta0 && theta0 != surface_theta0) {
        // New theta0 slice: close the finished curve and start the next one.
        current.theta0 = surface_theta0;
        result.curves.push_back(current);
        current.theta_big.clear();
        current.values.clear();
      }
      surface_theta0 = theta0;
      have_surface_theta0 = true;
      current.theta_big.push_back(theta);
      current.values.push_back(parse_double(fields[2]));
    } else {
      current.theta_big.push_back(theta);
      current.values.push_back(parse_double(fields[1]));
    }
  }
  flush();
  return result;
}

}  // namespace abscat
