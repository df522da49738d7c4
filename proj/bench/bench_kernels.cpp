// bench_kernels.cpp
// Wall-time comparison of the OpenMP kernels against their serial reference
// paths.  The two paths share the per-row summation order, so outputs must
// match bitwise; the benchmark asserts that along the way.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

#include "lawson/catalog.hpp"
#include "lawson/diffgeo.hpp"
#include "lawson/isometry.hpp"
#include "lawson/surfaces.hpp"

using namespace lawson;
using clock_type = std::chrono::steady_clock;

namespace {

double time_ms(const std::function<void()>& fn) {
  const auto t0 = clock_type::now();
  fn();
  const auto t1 = clock_type::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool identical) {
  std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n",
              name.c_str(), serial_ms, parallel_ms, serial_ms / parallel_ms,
              identical ? "bitwise equal" : "OUTPUT MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled\n");
#else
  std::printf("OpenMP disabled at configure time; both paths run serially\n");
#endif

  {
    const GeneralizedTriple t(2, 3, 7);
    double s = 0.0, p = 0.0;
    const double ts = time_ms([&] { s = square_integral_quadrature(t, 512, 512, Exec::serial); });
    const double tp = time_ms([&] { p = square_integral_quadrature(t, 512, 512, Exec::parallel); });
    report("square integral 512x512", ts, tp, s == p);
  }

  {
    const SurfaceFn f = generalized_surface(GeneralizedTriple(1, 2, 4));
    const Interval full{0.0, 2.0 * std::numbers::pi};
    double s = 0.0, p = 0.0;
    const double ts =
        time_ms([&] { s = max_minimality_residual(f, full, full, 64, 64, 2e-3, Exec::serial); });
    const double tp =
        time_ms([&] { p = max_minimality_residual(f, full, full, 64, 64, 2e-3, Exec::parallel); });
    report("minimality scan 64x64", ts, tp, s == p);
  }

  {
    const LawsonPair pair(9, 5);
    double s = 0.0, p = 0.0;
    const double ts = time_ms([&] { s = isometry_discrepancy(pair, 160, 160, Exec::serial); });
    const double tp = time_ms([&] { p = isometry_discrepancy(pair, 160, 160, Exec::parallel); });
    report("isometry grid 160x160", ts, tp, s == p);
  }

  {
    std::string s, p;
    const double ts = time_ms([&] { s = catalog_to_csv(build_catalog(70, Exec::serial)); });
    const double tp = time_ms([&] { p = catalog_to_csv(build_catalog(70, Exec::parallel)); });
    report("catalog sweep to sum 70", ts, tp, s == p);
  }

  return 0;
}
