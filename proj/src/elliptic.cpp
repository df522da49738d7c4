// elliptic.cpp

#include "lawson/elliptic.hpp"

#include <cmath>
#include <numbers>

namespace lawson {

namespace {

// Successive AGM scale factors closer than this are treated as converged.
constexpr double kAgmTol = 1e-15;
constexpr int kAgmMaxIter = 64;

// AGM for K(m), 0 <= m < 1.
double agm_K(double m) {
  double a = 1.0;
  double b = std::sqrt(1.0 - m);
  for (int i = 0; i < kAgmMaxIter && std::fabs(a - b) > kAgmTol * a; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return std::numbers::pi / (2.0 * a);
}

// AGM for E(m), 0 <= m < 1, via E = K (1 - sum 2^{n-1} c_n^2), c_0^2 = m.
double agm_E(double m) {
  double a = 1.0;
  double b = std::sqrt(1.0 - m);
  double sum = 1.0 - 0.5 * m;
  double pow2 = 1.0;
  for (int i = 0; i < kAgmMaxIter && std::fabs(a - b) > kAgmTol * a; ++i) {
    const double c = 0.5 * (a - b);
    sum -= pow2 * c * c;
    pow2 *= 2.0;
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return std::numbers::pi / (2.0 * a) * sum;
}

// Descending Landen (AGM backward recurrence) for sn, cn, dn with m in [0, 1).
// dn is recovered from its quadratic relation; it is positive for every real
// argument, so no sign tracking is needed and the quarter-period points stay
// well conditioned.
JacobiTriple sncndn_core(double u, double m) {
  if (m == 0.0) return {std::sin(u), std::cos(u), 1.0};

  double a[kAgmMaxIter];
  double c[kAgmMaxIter];
  a[0] = 1.0;
  c[0] = std::sqrt(m);
  double b = std::sqrt(1.0 - m);
  int n = 0;
  double twon = 1.0;
  while (std::fabs(c[n]) > kAgmTol * a[n] && n + 1 < kAgmMaxIter) {
    const double an = a[n];
    ++n;
    c[n] = 0.5 * (an - b);
    a[n] = 0.5 * (an + b);
    b = std::sqrt(an * b);
    twon *= 2.0;
  }

  double phi = twon * a[n] * u;
  for (int i = n; i > 0; --i) {
    double t = c[i] * std::sin(phi) / a[i];
    if (t > 1.0) t = 1.0;
    if (t < -1.0) t = -1.0;
    phi = 0.5 * (std::asin(t) + phi);
  }
  const double sn = std::sin(phi);
  const double cn = std::cos(phi);
  const double dn = std::sqrt(1.0 - m * sn * sn);
  return {sn, cn, dn};
}

}  // namespace

double elliptic_K(const EllipticParameter& p) {
  const double m = p.value();
  if (m == 1.0) throw DivergentError("K diverges at parameter 1");
  if (m > 1.0 - 1e-12) throw DomainError("K rejects parameters within 1e-12 of 1");
  if (m < 0.0) {
    // K(mu) = k' K(m) with m = -mu/(1-mu), k' = 1/sqrt(1-mu).
    const double mr = -m / (1.0 - m);
    return agm_K(mr) / std::sqrt(1.0 - m);
  }
  return agm_K(m);
}

double elliptic_E(const EllipticParameter& p) {
  const double m = p.value();
  if (m == 1.0) return 1.0;
  if (m < 0.0) {
    const double mr = -m / (1.0 - m);
    return agm_E(mr) * std::sqrt(1.0 - m);
  }
  return agm_E(m);
}

JacobiTriple jacobi_elliptic(double u, const EllipticParameter& p) {
  const double m = p.value();
  if (m >= 1.0) throw DomainError("Jacobi functions require parameter m < 1");
  if (m < 0.0) {
    // sn(z, mu) = k' sn(z/k', m)/dn(z/k', m), cn = cn/dn, dn = 1/dn.
    const double mr = -m / (1.0 - m);
    const double kp = 1.0 / std::sqrt(1.0 - m);
    const JacobiTriple t = sncndn_core(u / kp, mr);
    return {kp * t.sn / t.dn, t.cn / t.dn, 1.0 / t.dn};
  }
  return sncndn_core(u, m);
}

}  // namespace lawson
