// verify.hpp
// Desk-scale verification suites behind the `verify` command: named checks
// with measured maxima against tolerances.

#ifndef LAWSON_VERIFY_HPP
#define LAWSON_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "lawson/diffgeo.hpp"
#include "lawson/surfaces.hpp"

namespace lawson {

struct CheckLine {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckLine> lines;
  bool pass = false;
};

struct NamedSurface {
  std::string name;
  SurfaceFn fn;
};

// Identity checks on K, E, sn, cn, dn: Landen transforms, the imaginary
// modulus relation, the squared-sum invariants, periodicity.
VerifyReport verify_elliptic(std::optional<double> tol = {});

// Laplace-Beltrami residual |delta x_i - 2 x_i| over a midpoint grid.
VerifyReport verify_minimal(const std::vector<NamedSurface>& surfaces,
                            std::optional<double> tol = {});

// Pullback-metric discrepancy and domain extents per pair.
VerifyReport verify_isometry(const std::vector<LawsonPair>& pairs,
                             std::optional<double> tol = {});

// Raw parameter-square quadrature against the closed square integral.
VerifyReport verify_area(const std::vector<GeneralizedTriple>& triples,
                         std::optional<double> tol = {});

std::vector<NamedSurface> default_minimal_surfaces();
std::vector<LawsonPair> default_isometry_pairs();
std::vector<GeneralizedTriple> default_area_triples();

std::string format_report(const VerifyReport& report);

}  // namespace lawson

#endif
