// isometry.hpp
// The coordinate changes tying a bipolar surface to its generalized-family
// image, and numerical certification that they are isometries.
//
// Bipolar side: coordinates (u, w) with sin v = sn(w, kt).  Generalized side:
// coordinates (x, y) with sin y = sn(z, k), z affine in w.  The composed map
// is (u, w) -> (x, y) = (x_scale u, am(z_scale w + K(k), k)).

#ifndef LAWSON_ISOMETRY_HPP
#define LAWSON_ISOMETRY_HPP

#include <string>
#include <vector>

#include "lawson/diffgeo.hpp"
#include "lawson/elliptic.hpp"
#include "lawson/exec.hpp"
#include "lawson/surfaces.hpp"

namespace lawson {

struct ChangeOfVariables {
  LawsonPair pair;
  PairCase parity_case;
  GeneralizedTriple triple;  // canonical (0, a0, c)
  int a0, c;                 // frequency order (a0, 0, c) used by the formulas
  double k_param;            // -a0^2 / (c^2 - a0^2), negative
  double ktilde_param;       // (r^2 - m^2) / r^2, in (0, 1)
  int x_scale;               // 1 when r*m even, else 2
  double z_scale;            // 2 sqrt(c^2 - a0^2) / (a0 + c)
  double z_offset;           // K(k_param)
  double K_k;                // K(k_param), same value as z_offset
  double K_ktilde;           // K(ktilde_param)
};

ChangeOfVariables build_change_of_variables(const LawsonPair& p);

struct SurfaceCoords {
  double x, y;
  double z;  // intermediate elliptic coordinate, exposed for diagnostics
};

// y continues arcsin(sn(z, k)) across the branch points at odd multiples of
// K(k), so that it is smooth and increasing over z in [K, 5K).
// Throws BranchError if |sn| exceeds 1 beyond rounding.
SurfaceCoords map_bipolar_to_T(const ChangeOfVariables& cov, double u, double w);

// Max componentwise difference, over an nu x nw interior grid, between the
// generalized metric pulled back through the composed map and the bipolar
// metric expressed in (u, w).  Grid points keep a margin of 1e-3 from the
// branch lines w in {0, K(kt), 2K(kt)}.
double isometry_discrepancy(const LawsonPair& p, int nu, int nw, Exec exec = Exec::serial);

// Residual of the closed-form display the two sn substitutions leave behind:
//   x_scale^2 E(y(w))  vs  (q^2 + (rm)^2)/q,  q = r^2 - (r^2-m^2) sn^2(w, kt),
// maximized over n interior points of [0, 2K(kt)).
double intermediate_display_residual(const LawsonPair& p, int n);

// Relative error of one tangent vector's squared length through the map,
// |g(DPhi xi, DPhi xi) - gt(xi, xi)| / gt(xi, xi), DPhi by central
// differences in w with step h.
double tangent_isometry_error(const ChangeOfVariables& cov, double u, double w, double xi_u,
                              double xi_w, double h = 1e-5);

// Gauss-panel area of the one-to-one bipolar rectangle and of its image
// rectangle on the generalized side.
struct TransportedAreas {
  double bipolar;
  double generalized;
};
TransportedAreas transported_areas(const LawsonPair& p, int nx, int ny, Exec exec = Exec::serial);

struct ExtentCheck {
  std::string name;
  double measured = 0.0;
  double expected = 0.0;
  bool pass = false;
  double error() const { return measured > expected ? measured - expected : expected - measured; }
};

struct DomainCorrespondenceReport {
  ChangeOfVariables cov;
  std::vector<ExtentCheck> checks;
  bool pass = false;
};

// Verifies the affine image of the z-interval [K, 5K) has length 2K(kt) and
// that the one-to-one x-extent matches the parity case (2pi, pi, or pi/2).
DomainCorrespondenceReport domain_correspondence_check(const LawsonPair& p);

}  // namespace lawson

#endif
