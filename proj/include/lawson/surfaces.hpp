// surfaces.hpp
// The three families of immersed tori/Klein bottles in the unit sphere:
//
//   tau surfaces      psi(u,v) = (cos ru cos v, sin ru cos v, cos mu sin v, sin mu sin v) in S^3
//   bipolar surfaces  psi ^ psi*  in S^5, psi* the unit normal of psi in S^3
//   generalized family T_{a,b,c} in S^5, three complex slots with frequencies a, b, c
//
// plus the integer parameter types, canonicalization/classification, the
// parameter maps between bipolar pairs and (a, 0, c) triples, and fundamental
// domain bookkeeping.

#ifndef LAWSON_SURFACES_HPP
#define LAWSON_SURFACES_HPP

#include <array>
#include <functional>
#include <optional>

#include "lawson/errors.hpp"

namespace lawson {

enum class Topology { torus, klein_bottle };
enum class Regime { interior, lawson_boundary };

// Residue class of r*m, which selects the parameter map and the topology of
// the bipolar surface.
enum class PairCase { rm_even, rm_1_mod_4, rm_3_mod_4 };

const char* to_string(Topology t);
const char* to_string(Regime r);

// Coprime integer pair r > m > 0 indexing a tau surface whose bipolar
// surface is itself an immersed surface.
class LawsonPair {
 public:
  LawsonPair(int r, int m);
  int r() const { return r_; }
  int m() const { return m_; }
  PairCase parity_case() const;
  friend bool operator==(const LawsonPair&, const LawsonPair&) = default;

 private:
  int r_, m_;
};

// Canonical representative of a frequency triple: entries non-negative,
// gcd 1, a <= b, with c either strictly dominant (interior, c^2 > a^2 + b^2)
// or on the boundary c^2 = a^2 + b^2 with a, b >= 1.
class GeneralizedTriple {
 public:
  GeneralizedTriple(int a, int b, int c);
  int a() const { return a_; }
  int b() const { return b_; }
  int c() const { return c_; }
  int sum() const { return a_ + b_ + c_; }
  Regime regime() const { return regime_; }
  Topology topology() const { return topology_; }
  friend bool operator==(const GeneralizedTriple& x, const GeneralizedTriple& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
  }

 private:
  int a_, b_, c_;
  Regime regime_;
  Topology topology_;
};

// Point of S^3 or S^5 stored in a fixed-size slot array.
struct AmbientPoint {
  int dim = 0;
  std::array<double, 6> x{};
  double operator[](int i) const { return x[static_cast<std::size_t>(i)]; }
  double norm() const;
};

double dot(const AmbientPoint& p, const AmbientPoint& q);
double distance(const AmbientPoint& p, const AmbientPoint& q);

// tau surface.  Any coprime pair of positive integers is a valid immersion;
// the stricter LawsonPair is only needed once the normal enters the picture.
AmbientPoint lawson_immersion(int r, int m, double u, double v);
AmbientPoint lawson_immersion(const LawsonPair& p, double u, double v);

// Unit normal of the tau surface inside S^3.
AmbientPoint gauss_normal(const LawsonPair& p, double u, double v);

// Bipolar surface, written out slot by slot.  Satisfies
// r x1 + m x2 = 0 identically.
AmbientPoint bipolar_immersion(const LawsonPair& p, double u, double v);

// Same surface through the generic exterior product psi ^ psi* in the
// lexicographic basis e_i ^ e_j, i < j, followed by the fixed signed slot
// permutation below.
AmbientPoint bipolar_immersion_wedge(const LawsonPair& p, double u, double v);

struct WedgeSlot {
  int index;    // position in the lexicographic wedge coordinates
  double sign;  // +1 or -1
};

// Frozen calibration: slot s of the explicit bipolar immersion equals
// sign * wedge[index].  Guarded by a test against calibrate_wedge_permutation.
inline constexpr std::array<WedgeSlot, 6> kWedgePermutation = {
    WedgeSlot{0, 1.0}, WedgeSlot{5, 1.0}, WedgeSlot{1, 1.0},
    WedgeSlot{4, 1.0}, WedgeSlot{3, 1.0}, WedgeSlot{2, 1.0}};

// Recompute the permutation from scratch at a non-degenerate reference point.
std::array<WedgeSlot, 6> calibrate_wedge_permutation();

// Generalized family.  Valid in both regimes; on the boundary the third
// complex slot vanishes identically.
AmbientPoint generalized_immersion(const GeneralizedTriple& t, double x, double y);

// Parameter maps between bipolar pairs and triples of the form (0, a0, c).
GeneralizedTriple to_generalized(const LawsonPair& p);
std::optional<LawsonPair> to_bipolar_pair(const GeneralizedTriple& t);

struct Interval {
  double lo, hi;  // half-open [lo, hi)
  double length() const { return hi - lo; }
};

// Rectangle in the elliptic coordinates (x, z) used by the closed metric of
// a (0, a0, c) triple: z runs over [K, 5K) at the (negative) parameter
// -a0^2/(c^2 - a0^2).
struct EllipticRectangle {
  Interval x;
  Interval z;
  double quarter_period;  // K at that parameter
};

struct FundamentalDomain {
  Interval x;
  Interval y;
  int covering_degree;  // of the parameter square [0,2pi)^2 over the surface
  std::optional<EllipticRectangle> elliptic;
};

FundamentalDomain fundamental_domain(const GeneralizedTriple& t);

// Type-erased immersion handle used by the finite-difference machinery.
using SurfaceFn = std::function<AmbientPoint(double, double)>;

SurfaceFn lawson_surface(int r, int m);
SurfaceFn lawson_surface(const LawsonPair& p);
SurfaceFn bipolar_surface(const LawsonPair& p);
SurfaceFn generalized_surface(const GeneralizedTriple& t);

}  // namespace lawson

#endif
