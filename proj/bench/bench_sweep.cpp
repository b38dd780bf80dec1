// Compares the serial reference kernels with the OpenMP ones on a dense
// sweep and on the oracle-equivalence suite, and verifies the outputs are
// bitwise identical while at it.
#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "abscat/checks.hpp"
#include "abscat/curve.hpp"
#include "abscat/sweep.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point start) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - start)
      .count();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (OpenMP not enabled)\n");
#endif

  abscat::SweepSpec spec;
  spec.preset = abscat::Preset::fig3;
  spec.n_theta = 4096;
  spec.theta0_values = abscat::expand_range(0.0, 6.283185307179586, 65);

  auto t0 = clock_type::now();
  const auto serial = abscat::run_sweep(spec, abscat::ExecutionPolicy::serial);
  const double t_serial = ms_since(t0);

  t0 = clock_type::now();
  const auto parallel = abscat::run_sweep(spec, abscat::ExecutionPolicy::parallel);
  const double t_parallel = ms_since(t0);

  bool identical = serial.curves.size() == parallel.curves.size();
  for (std::size_t c = 0; identical && c < serial.curves.size(); ++c)
    identical = serial.curves[c].values == parallel.curves[c].values;

  std::printf("sweep %zu curves x %d points: serial %8.2f ms | parallel %8.2f ms"
              " | speedup %.2fx | bitwise %s\n",
              serial.curves.size(), spec.n_theta, t_serial, t_parallel,
              t_serial / t_parallel, identical ? "equal" : "DIFFER");

  const std::vector<abscat::CheckKind> kinds{abscat::CheckKind::oracle_equivalence};
  t0 = clock_type::now();
  const auto r_serial =
      abscat::run_checks(kinds, 7, 200000, abscat::ExecutionPolicy::serial);
  const double c_serial = ms_since(t0);

  t0 = clock_type::now();
  const auto r_parallel =
      abscat::run_checks(kinds, 7, 200000, abscat::ExecutionPolicy::parallel);
  const double c_parallel = ms_since(t0);

  std::printf("oracle suite 2e5 tuples:      serial %8.2f ms | parallel %8.2f ms"
              " | speedup %.2fx | max residual %.3e (both %s)\n",
              c_serial, c_parallel, c_serial / c_parallel,
              r_parallel.front().max_residual,
              r_serial.front().max_residual == r_parallel.front().max_residual
                  ? "equal"
                  : "DIFFER");
  return identical ? 0 : 1;
}
