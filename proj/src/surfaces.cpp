// surfaces.cpp

#include "lawson/surfaces.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <numeric>

#include "lawson/elliptic.hpp"

namespace lawson {

const char* to_string(Topology t) {
  return t == Topology::torus ? "torus" : "klein_bottle";
}

const char* to_string(Regime r) {
  return r == Regime::interior ? "interior" : "lawson_boundary";
}

LawsonPair::LawsonPair(int r, int m) : r_(r), m_(m) {
  if (!(r > m && m > 0)) throw InvalidParams("pair requires r > m > 0");
  if (std::gcd(r, m) != 1) throw InvalidParams("pair requires gcd(r, m) = 1");
}

PairCase LawsonPair::parity_case() const {
  const int p = (r_ * m_) % 4;
  if (p % 2 == 0) return PairCase::rm_even;
  return p == 1 ? PairCase::rm_1_mod_4 : PairCase::rm_3_mod_4;
}

GeneralizedTriple::GeneralizedTriple(int a, int b, int c) {
  a = std::abs(a);
  b = std::abs(b);
  c = std::abs(c);
  if (a == 0 && b == 0 && c == 0) throw InvalidParams("triple must be nonzero");
  const int g = std::gcd(std::gcd(a, b), c);
  a /= g;
  b /= g;
  c /= g;
  if (a > b) std::swap(a, b);
  const long lhs = static_cast<long>(c) * c;
  const long rhs = static_cast<long>(a) * a + static_cast<long>(b) * b;
  if (lhs > rhs) {
    regime_ = Regime::interior;
    // Interior parity rule: the square double-covers the surface exactly when
    // c is even, and the quotient is one-sided when a, b have opposite parity.
    if (c % 2 == 0 && (a + b) % 2 == 1) {
      topology_ = Topology::klein_bottle;
    } else {
      topology_ = Topology::torus;
    }
  } else if (lhs == rhs && a >= 1) {
    regime_ = Regime::lawson_boundary;
    // On the boundary the surface is the tau surface with frequencies (a, b):
    // a torus when both are odd, a Klein bottle when either is even.
    topology_ = (a % 2 == 1 && b % 2 == 1) ? Topology::torus : Topology::klein_bottle;
  } else {
    throw InvalidParams("triple requires c^2 > a^2 + b^2, or c^2 = a^2 + b^2 with a,b >= 1");
  }
  a_ = a;
  b_ = b;
  c_ = c;
}

double AmbientPoint::norm() const {
  double s = 0.0;
  for (int i = 0; i < dim; ++i) s += x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
  return std::sqrt(s);
}

double dot(const AmbientPoint& p, const AmbientPoint& q) {
  double s = 0.0;
  for (int i = 0; i < p.dim; ++i) s += p[i] * q[i];
  return s;
}

double distance(const AmbientPoint& p, const AmbientPoint& q) {
  double s = 0.0;
  for (int i = 0; i < p.dim; ++i) s += (p[i] - q[i]) * (p[i] - q[i]);
  return std::sqrt(s);
}

AmbientPoint lawson_immersion(int r, int m, double u, double v) {
  if (r < 1 || m < 1 || std::gcd(r, m) != 1)
    throw InvalidParams("tau surface requires coprime positive frequencies");
  AmbientPoint p;
  p.dim = 4;
  const double cv = std::cos(v), sv = std::sin(v);
  p.x = {std::cos(r * u) * cv, std::sin(r * u) * cv,
         std::cos(m * u) * sv, std::sin(m * u) * sv, 0.0, 0.0};
  return p;
}

AmbientPoint lawson_immersion(const LawsonPair& p, double u, double v) {
  return lawson_immersion(p.r(), p.m(), u, v);
}

AmbientPoint gauss_normal(const LawsonPair& p, double u, double v) {
  const double r = p.r(), m = p.m();
  const double cv = std::cos(v), sv = std::sin(v);
  const double d = std::sqrt(r * r * cv * cv + m * m * sv * sv);
  if (d < 1e-14) throw DegeneracyError("normal denominator vanished");
  AmbientPoint n;
  n.dim = 4;
  n.x = {m * std::sin(r * u) * sv / d, -m * std::cos(r * u) * sv / d,
         -r * std::sin(m * u) * cv / d, r * std::cos(m * u) * cv / d, 0.0, 0.0};
  return n;
}

AmbientPoint bipolar_immersion(const LawsonPair& p, double u, double v) {
  const double r = p.r(), m = p.m();
  const double cv = std::cos(v), sv = std::sin(v);
  const double cr = std::cos(r * u), sr = std::sin(r * u);
  const double cm = std::cos(m * u), sm = std::sin(m * u);
  const double d = std::sqrt(r * r * cv * cv + m * m * sv * sv);
  if (d < 1e-14) throw DegeneracyError("bipolar denominator vanished");
  AmbientPoint q;
  q.dim = 6;
  q.x = {-m * sv * cv / d,
         r * sv * cv / d,
         (-r * cv * cv * sm * cr - m * sv * sv * sr * cm) / d,
         (r * cv * cv * cm * sr + m * sv * sv * cr * sm) / d,
         (-r * cv * cv * sm * sr + m * sv * sv * cr * cm) / d,
         (r * cv * cv * cm * cr - m * sv * sv * sr * sm) / d};
  return q;
}

namespace {

// Lexicographic wedge coordinates of psi ^ psi*:
// (12, 13, 14, 23, 24, 34) with w_ij = psi_i psi*_j - psi_j psi*_i.
std::array<double, 6> wedge_coords(const LawsonPair& p, double u, double v) {
  const AmbientPoint a = lawson_immersion(p, u, v);
  const AmbientPoint b = gauss_normal(p, u, v);
  std::array<double, 6> w{};
  int k = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      w[static_cast<std::size_t>(k++)] = a[i] * b[j] - a[j] * b[i];
  return w;
}

// Matches each slot of the explicit immersion to the wedge coordinate with the
// same magnitude.  Requires six distinct nonzero magnitudes at (p, u, v).
std::array<WedgeSlot, 6> calibrate_at(const LawsonPair& p, double u, double v) {
  const std::array<double, 6> w = wedge_coords(p, u, v);
  const AmbientPoint e = bipolar_immersion(p, u, v);
  std::array<WedgeSlot, 6> out{};
  for (int s = 0; s < 6; ++s) {
    int best = -1;
    double sign = 0.0;
    for (int i = 0; i < 6; ++i) {
      const double wi = w[static_cast<std::size_t>(i)];
      if (std::fabs(std::fabs(wi) - std::fabs(e[s])) < 1e-12 && std::fabs(wi) > 1e-6) {
        best = i;
        sign = (wi * e[s] > 0.0) ? 1.0 : -1.0;
        break;
      }
    }
    if (best < 0) throw DegeneracyError("wedge calibration point is degenerate");
    out[static_cast<std::size_t>(s)] = WedgeSlot{best, sign};
  }
  return out;
}

}  // namespace

AmbientPoint bipolar_immersion_wedge(const LawsonPair& p, double u, double v) {
  const std::array<double, 6> w = wedge_coords(p, u, v);
  AmbientPoint q;
  q.dim = 6;
  for (std::size_t s = 0; s < 6; ++s)
    q.x[s] = kWedgePermutation[s].sign * w[static_cast<std::size_t>(kWedgePermutation[s].index)];
  return q;
}

std::array<WedgeSlot, 6> calibrate_wedge_permutation() {
  // Any point with six distinct nonzero wedge coordinates works; this one was
  // checked to be far from every coincidence.
  return calibrate_at(LawsonPair(2, 1), 0.7, 0.4);
}

AmbientPoint generalized_immersion(const GeneralizedTriple& t, double x, double y) {
  const double a = t.a(), b = t.b(), c = t.c();
  const double ca = c * c - a * a;
  const double cb = c * c - b * b;
  if (ca <= 0.0 || cb <= 0.0) throw DegeneracyError("coefficient denominator vanished");
  const double A = std::sqrt((b * b + c * c - a * a) / (2.0 * ca));
  const double B = std::sqrt((a * a + c * c - b * b) / (2.0 * cb));
  const double C2 = (c * c - a * a - b * b) / (2.0 * cb);
  const double C = std::sqrt(C2 < 0.0 ? 0.0 : C2);
  const double sy = std::sin(y), cy = std::cos(y);
  const double rad = 1.0 - (b * b - a * a) / ca * sy * sy;
  const double R = std::sqrt(rad < 0.0 ? 0.0 : rad);
  AmbientPoint q;
  q.dim = 6;
  q.x = {A * std::cos(a * x) * sy, A * std::sin(a * x) * sy,
         B * std::cos(b * x) * cy, B * std::sin(b * x) * cy,
         C * std::cos(c * x) * R,  C * std::sin(c * x) * R};
  return q;
}

GeneralizedTriple to_generalized(const LawsonPair& p) {
  const int r = p.r(), m = p.m();
  if (p.parity_case() == PairCase::rm_even) return GeneralizedTriple(r - m, 0, r + m);
  return GeneralizedTriple((r - m) / 2, 0, (r + m) / 2);
}

std::optional<LawsonPair> to_bipolar_pair(const GeneralizedTriple& t) {
  if (t.a() != 0 || t.b() == 0) return std::nullopt;  // needs the form (0, a0, c)
  const int a0 = t.b(), c = t.c();
  if (a0 % 2 == 1 && c % 2 == 1) return LawsonPair((c + a0) / 2, (c - a0) / 2);
  return LawsonPair(c + a0, c - a0);
}

FundamentalDomain fundamental_domain(const GeneralizedTriple& t) {
  FundamentalDomain d;
  const double two_pi = 2.0 * std::numbers::pi;
  d.x = {0.0, two_pi};
  d.y = {0.0, two_pi};
  d.covering_degree = (t.c() % 2 == 0) ? 2 : 1;
  if (t.a() == 0 && t.b() >= 1) {
    const int a0 = t.b(), c = t.c();
    const double K =
        elliptic_K(-static_cast<double>(a0) * a0 / (static_cast<double>(c) * c - a0 * a0));
    EllipticRectangle rect;
    // The (x, z) rectangle is in bijection with the surface: full x period
    // when the square is a single cover, half of it when it double-covers.
    rect.x = {0.0, c % 2 == 0 ? std::numbers::pi : two_pi};
    rect.z = {K, 5.0 * K};
    rect.quarter_period = K;
    d.elliptic = rect;
  }
  return d;
}

SurfaceFn lawson_surface(int r, int m) {
  return [r, m](double u, double v) { return lawson_immersion(r, m, u, v); };
}

SurfaceFn lawson_surface(const LawsonPair& p) { return lawson_surface(p.r(), p.m()); }

SurfaceFn bipolar_surface(const LawsonPair& p) {
  return [p](double u, double v) { return bipolar_immersion(p, u, v); };
}

SurfaceFn generalized_surface(const GeneralizedTriple& t) {
  return [t](double x, double y) { return generalized_immersion(t, x, y); };
}

}  // namespace lawson
