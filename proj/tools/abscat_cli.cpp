// Command-line front end: curve sweeps (including the figure presets),
// randomized identity checks, CSV/JSON emission.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "abscat/checks.hpp"
#include "abscat/curve.hpp"
#include "abscat/errors.hpp"
#include "abscat/sweep.hpp"
#include "abscat/textio.hpp"

namespace {

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open output file: " + path);
  out << content;
  out.flush();
  if (!out) throw io_error("failed while writing output file: " + path);
}

std::vector<double> parse_theta0_range(const std::string& text) {
  const auto first = text.find(':');
  const auto second = text.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw std::invalid_argument("--theta0-range expects LO:HI:N");
  const double lo = abscat::parse_double(text.substr(0, first));
  const double hi = abscat::parse_double(text.substr(first + 1, second - first - 1));
  const double n = abscat::parse_double(text.substr(second + 1));
  if (n < 1 || n != static_cast<int>(n))
    throw std::invalid_argument("--theta0-range: N must be a positive integer");
  return abscat::expand_range(lo, hi, static_cast<int>(n));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differential cross sections for Aharonov-Bohm scattering "
               "with generalized boundary conditions"};

  std::string preset_name;
  double alpha = 0.5;
  std::optional<double> theta0;
  std::string theta0_range;
  double u = 0, v = 0, w_re = 0, w_im = 0;
  double k = 1.0;
  bool physical = false;
  int n_theta = 1024;
  double exclusion = 1e-3;
  std::string format = "csv";
  std::string output;
  std::vector<std::string> check_tokens;
  std::uint64_t seed = 1;
  int trials = 1000;

  auto* opt_preset =
      app.add_option("--preset", preset_name, "Figure preset")
          ->check(CLI::IsMember({"fig1", "fig2", "fig3"}));
  auto* opt_alpha =
      app.add_option("--alpha", alpha, "Flux parameter in (0,1)");
  auto* opt_theta0 =
      app.add_option("--theta0", theta0, "Incidence angle (radians)");
  auto* opt_theta0_range = app.add_option(
      "--theta0-range", theta0_range, "Incidence angle sweep LO:HI:N");
  auto* opt_u = app.add_option("--u", u, "Boundary parameter u");
  auto* opt_v = app.add_option("--v", v, "Boundary parameter v");
  auto* opt_wre = app.add_option("--w-re", w_re, "Re w");
  auto* opt_wim = app.add_option("--w-im", w_im, "Im w");
  auto* opt_k = app.add_option("--k", k, "Wavenumber (default 1)");
  auto* opt_physical = app.add_flag(
      "--physical", physical,
      "Interpret --u/--v/--w-re/--w-im as the primed (momentum-independent) "
      "parameters and rescale with --alpha and --k");
  app.add_option("--n-theta", n_theta, "Samples per curve (default 1024)");
  app.add_option("--exclusion", exclusion,
                 "Forward-window half width around Theta = +-pi (default 1e-3)");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", output, "Output path (default: stdout)");
  app.add_option("--check", check_tokens,
                 "Run verification suites (eq13,eq19,oracle,symmetry)")
      ->delimiter(',');
  app.add_option("--seed", seed, "Seed for --check suites (default 1)");
  app.add_option("--trials", trials, "Trials per --check suite (default 1000)");

  opt_theta0->excludes(opt_theta0_range);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (!check_tokens.empty()) {
      if (*opt_preset)
        throw std::invalid_argument("--check cannot be combined with --preset");
      std::vector<abscat::CheckKind> kinds;
      for (const auto& token : check_tokens) {
        const auto kind = abscat::check_from_token(token);
        if (!kind)
          throw std::invalid_argument("unknown check '" + token +
                                      "' (expected eq13, eq19, oracle or symmetry)");
        kinds.push_back(*kind);
      }
      const auto results = abscat::run_checks(kinds, seed, trials);
      const std::string report = abscat::checks_report_json(results, seed);
      if (output.empty())
        std::cout << report;
      else
        write_output(output, report);
      return abscat::all_passed(results) ? 0 : 2;
    }

    abscat::SweepSpec spec;
    spec.alpha = alpha;
    spec.k = k;
    spec.n_theta = n_theta;
    spec.exclusion = exclusion;

    if (*opt_preset) {
      spec.preset = preset_name == "fig1"   ? abscat::Preset::fig1
                    : preset_name == "fig2" ? abscat::Preset::fig2
                                            : abscat::Preset::fig3;
      // The presets pin their physics parameters.
      if (*opt_alpha || *opt_u || *opt_v || *opt_wre || *opt_wim || *opt_physical)
        throw std::invalid_argument(
            "--preset fixes alpha/u/v/w; only grid and output flags apply");
      if (spec.preset != abscat::Preset::fig2 && *opt_theta0)
        throw std::invalid_argument("--theta0 applies only to --preset fig2");
      if (spec.preset != abscat::Preset::fig3 && *opt_theta0_range)
        throw std::invalid_argument("--theta0-range applies only to --preset fig3");
      spec.alpha = 0.5;
      if (*opt_theta0) spec.theta0_values = {*theta0};
      if (*opt_theta0_range)
        spec.theta0_values = parse_theta0_range(theta0_range);
    } else {
      spec.preset = abscat::Preset::custom;
      spec.u = u;
      spec.v = v;
      spec.w_re = w_re;
      spec.w_im = w_im;
      spec.physical = physical;
      if (physical && !*opt_k)
        throw std::invalid_argument(
            "--physical parameters are momentum-dependent: pass --k explicitly");
      if (*opt_theta0_range)
        spec.theta0_values = parse_theta0_range(theta0_range);
      else
        spec.theta0_values = {theta0.value_or(0.0)};
    }

    const abscat::SweepResult result = abscat::run_sweep(spec);
    const std::string content =
        format == "json" ? abscat::to_json(result) : abscat::to_csv(result);
    if (output.empty()) {
      std::cout << content;
    } else {
      write_output(output, content);
      if (n_theta >= 256) {
        for (std::size_t i = 0; i < result.curves.size(); ++i)
          std::cout << "curve " << (i + 1) << ": shape="
                    << abscat::to_string(abscat::classify_shape(result.curves[i]))
                    << "\n";
      }
    }
    return 0;
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
