#include "abscat/sweep.hpp"

#include <cmath>
#include <complex>
#include <exception>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "abscat/angles.hpp"
#include "abscat/closed_forms.hpp"
#include "abscat/smatrix.hpp"
#include "abscat/textio.hpp"
#include "abscat/version.hpp"

namespace abscat {

namespace {

using std::numbers::pi;
using Metadata = std::vector<std::pair<std::string, std::string>>;

template <class Eval>
void map_grid_serial(const std::vector<double>& grid, const Eval& eval,
                     std::vector<double>& out) {
  out.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out[i] = eval(grid[i]);
}

template <class Eval>
void map_grid_parallel(const std::vector<double>& grid, const Eval& eval,
                       std::vector<double>& out) {
  out.resize(grid.size());
  std::exception_ptr error;
  const std::int64_t n = static_cast<std::int64_t>(grid.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      out[i] = eval(grid[i]);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
      out[i] = 0;
    }
  }
  if (error) std::rethrow_exception(error);
}

void validate_spec(const SweepSpec& spec) {
  if (spec.n_theta < 16)
    throw std::invalid_argument("SweepSpec: n_theta must be >= 16");
  if (!(spec.exclusion > 0) || !(spec.exclusion < pi / 8))
    throw std::invalid_argument("SweepSpec: exclusion must lie in (0, pi/8)");
  if (!(spec.k > 0) || !std::isfinite(spec.k))
    throw std::invalid_argument("SweepSpec: k must be positive and finite");
}

struct CurvePlan {
  std::string label;    // curve index within the sweep
  std::string formula;  // provenance identifier
  EffectiveParams ep;
  double theta0;
  bool note = false;    // attach the limit-interpretation note
  std::function<double(const ScatteringGeometry&)> eval;
};

Metadata curve_metadata(const SweepSpec& spec, const CurvePlan& plan,
                        const char* preset_name) {
  Metadata meta;
  meta.emplace_back("version", std::string(kVersion));
  meta.emplace_back("preset", preset_name);
  meta.emplace_back("curve", plan.label);
  meta.emplace_back("formula", plan.formula);
  meta.emplace_back("alpha", format_sig17(plan.ep.alpha.value()));
  meta.emplace_back("theta0", format_sig17(plan.theta0));
  if (plan.formula == "general-smatrix") {
    meta.emplace_back("u", format_sig17(plan.ep.u));
    meta.emplace_back("v", format_sig17(plan.ep.v));
    meta.emplace_back("w_re", format_sig17(plan.ep.w.real()));
    meta.emplace_back("w_im", format_sig17(plan.ep.w.imag()));
  }
  meta.emplace_back("k", format_sig17(plan.ep.k));
  meta.emplace_back("n_theta", std::to_string(spec.n_theta));
  meta.emplace_back("exclusion", format_sig17(spec.exclusion));
  if (plan.note)
    meta.emplace_back("note", std::string(w_infinity_limit_note()));
  return meta;
}

CurvePlan general_plan(std::string label, EffectiveParams ep, double theta0) {
  CurvePlan plan{std::move(label), "general-smatrix", ep, theta0, false, {}};
  // det N and the Sigma entries depend only on the parameters, so they are
  // computed once per curve and shared across the grid.
  const SigmaMatrix sm = sigma_matrix(ep);
  const double alpha = ep.alpha.value();
  plan.eval = [sm, alpha](const ScatteringGeometry& g) {
    return normalized_dcs(sm, alpha, g);
  };
  return plan;
}

const char* preset_name(Preset p) {
  switch (p) {
    case Preset::fig1: return "fig1";
    case Preset::fig2: return "fig2";
    case Preset::fig3: return "fig3";
    case Preset::custom: return "custom";
  }
  return "custom";
}

}  // namespace

std::vector<double> theta_grid(int n_theta, double exclusion) {
  if (n_theta < 2) throw std::invalid_argument("theta_grid: need n_theta >= 2");
  const double lo = -pi + exclusion;
  const double hi = pi - exclusion;
  std::vector<double> grid(n_theta);
  const double step = (hi - lo) / (n_theta - 1);
  for (int i = 0; i < n_theta; ++i) grid[i] = lo + i * step;
  return grid;
}

std::vector<double> expand_range(double lo, double hi, int n) {
  if (n < 1) throw std::invalid_argument("expand_range: need n >= 1");
  std::vector<double> values(n);
  if (n == 1) {
    values[0] = lo;
    return values;
  }
  const double step = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) values[i] = lo + i * step;
  return values;
}

SweepResult run_sweep(const SweepSpec& spec, ExecutionPolicy policy) {
  validate_spec(spec);

  std::vector<double> theta0s = spec.theta0_values;
  if (theta0s.empty())
    theta0s = (spec.preset == Preset::fig3) ? expand_range(0.0, kTwoPi, 33)
                                            : std::vector<double>{0.0};
  for (double t0 : theta0s)
    if (!std::isfinite(t0))
      throw std::invalid_argument("SweepSpec: theta0 must be finite");
  if (spec.preset == Preset::fig1 && theta0s != std::vector<double>{0.0})
    throw std::invalid_argument("SweepSpec: fig1 fixes theta0 = 0");
  if (spec.preset == Preset::fig2 && theta0s.size() != 1)
    throw std::invalid_argument("SweepSpec: fig2 takes a single theta0");

  const FluxAlpha alpha{spec.alpha};
  std::vector<CurvePlan> plans;

  switch (spec.preset) {
    case Preset::fig1: {
      const EffectiveParams sets[3] = {
          {25, 1, {3, 3}, FluxAlpha(0.5), spec.k},
          {20, 0, {3, 0}, FluxAlpha(0.5), spec.k},
          {1, 10, {0, 0}, FluxAlpha(0.5), spec.k},
      };
      for (int i = 0; i < 3; ++i)
        plans.push_back(general_plan(std::to_string(i + 1), sets[i], 0.0));
      break;
    }
    case Preset::fig2: {
      const double theta0 = theta0s.front();
      const FluxAlpha half{0.5};
      const double k = spec.k;
      CurvePlan limit{"1", "w-infinity-limit",
                      EffectiveParams(0, 0, {0, 0}, half, k), theta0, true, {}};
      limit.eval = [half, k](const ScatteringGeometry& g) {
        return k * dcs_w_infinity(half, k, g);
      };
      plans.push_back(std::move(limit));
      CurvePlan pure{"2", "pure-ab", EffectiveParams(0, 0, {0, 0}, half, k),
                     theta0, false, {}};
      pure.eval = [half, k](const ScatteringGeometry& g) {
        return k * dcs_pure_ab(half, k, g);
      };
      plans.push_back(std::move(pure));
      break;
    }
    case Preset::fig3: {
      int index = 1;
      for (double t0 : theta0s) {
        plans.push_back(general_plan(
            std::to_string(index++),
            EffectiveParams(5, 5, {5, 0}, FluxAlpha(0.5), spec.k), t0));
      }
      break;
    }
    case Preset::custom: {
      EffectiveParams ep = spec.physical
                               ? rescale({spec.u, spec.v, {spec.w_re, spec.w_im}},
                                         alpha, spec.k)
                               : EffectiveParams(spec.u, spec.v,
                                                 {spec.w_re, spec.w_im}, alpha,
                                                 spec.k);
      int index = 1;
      for (double t0 : theta0s)
        plans.push_back(general_plan(std::to_string(index++), ep, t0));
      break;
    }
  }

  const std::vector<double> grid = theta_grid(spec.n_theta, spec.exclusion);

  SweepResult result;
  result.surface = theta0s.size() > 1;
  for (auto& plan : plans) {
    CrossSectionCurve curve;
    curve.metadata = curve_metadata(spec, plan, preset_name(spec.preset));
    if (spec.physical && spec.preset == Preset::custom) {
      curve.metadata.emplace_back("mode", "physical");
      curve.metadata.emplace_back("u_prime", format_sig17(spec.u));
      curve.metadata.emplace_back("v_prime", format_sig17(spec.v));
      curve.metadata.emplace_back("w_prime_re", format_sig17(spec.w_re));
      curve.metadata.emplace_back("w_prime_im", format_sig17(spec.w_im));
    }
    curve.theta_big = grid;
    curve.theta0 = plan.theta0;

    const double theta0 = plan.theta0;
    const auto& eval = plan.eval;
    const auto point = [theta0, &eval](double theta_big) {
      // Theta = theta - theta0 + pi (mod 2pi)  =>  theta = theta0 + Theta - pi.
      return eval(ScatteringGeometry{theta0 + theta_big - pi, theta0});
    };
    if (policy == ExecutionPolicy::parallel)
      map_grid_parallel(grid, point, curve.values);
    else
      map_grid_serial(grid, point, curve.values);

    for (double y : curve.values)
      if (!std::isfinite(y) || y < 0)
        throw std::runtime_error("run_sweep: non-finite or negative sample");
    result.curves.push_back(std::move(curve));
  }
  return result;
}

}  // namespace abscat
