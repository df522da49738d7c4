// verify.cpp

#include "lawson/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "lawson/elliptic.hpp"
#include "lawson/isometry.hpp"
#include "lawson/spectral.hpp"

namespace lawson {

namespace {

CheckLine line(std::string name, double measured, double fallback_tol,
               std::optional<double> tol) {
  CheckLine l;
  l.name = std::move(name);
  l.measured = measured;
  l.tolerance = tol.value_or(fallback_tol);
  l.pass = measured < l.tolerance;
  return l;
}

std::string pair_tag(const LawsonPair& p) {
  return "(" + std::to_string(p.r()) + "," + std::to_string(p.m()) + ")";
}

std::string triple_tag(const GeneralizedTriple& t) {
  return "(" + std::to_string(t.a()) + "," + std::to_string(t.b()) + "," +
         std::to_string(t.c()) + ")";
}

void finish(VerifyReport& rep) {
  rep.pass = true;
  for (const CheckLine& l : rep.lines) rep.pass = rep.pass && l.pass;
}

}  // namespace

VerifyReport verify_elliptic(std::optional<double> tol) {
  VerifyReport rep;
  rep.suite = "elliptic";
  const double params[] = {0.1, 0.25, 0.5, 0.75, 0.9};
  const double us[] = {0.2, 0.7, 1.3, 2.1, 3.4};

  double im_sn = 0.0, im_K = 0.0, landen_sn = 0.0, landen_K = 0.0;
  double sq_sum = 0.0, dn_sum = 0.0, periodicity = 0.0;
  for (double m : params) {
    const double kp = std::sqrt(1.0 - m);
    const double m_hat = -m / (1.0 - m);
    im_K = std::max(im_K, std::fabs(elliptic_K(m_hat) - kp * elliptic_K(m)));
    const double landen_param = ((1.0 - kp) / (1.0 + kp)) * ((1.0 - kp) / (1.0 + kp));
    landen_K = std::max(
        landen_K, std::fabs(elliptic_K(m) - 2.0 / (1.0 + kp) * elliptic_K(landen_param)));
    for (double u : us) {
      const JacobiTriple jt = jacobi_elliptic(u, m);
      im_sn = std::max(im_sn,
                       std::fabs(jacobi_elliptic(kp * u, m_hat).sn - kp * jt.sn / jt.dn));
      landen_sn = std::max(
          landen_sn, std::fabs(jacobi_elliptic((1.0 + kp) * u, landen_param).sn -
                               (1.0 + kp) * jt.sn * jt.cn / jt.dn));
      sq_sum = std::max(sq_sum, std::fabs(jt.sn * jt.sn + jt.cn * jt.cn - 1.0));
      dn_sum = std::max(dn_sum, std::fabs(jt.dn * jt.dn + m * jt.sn * jt.sn - 1.0));
      const JacobiTriple shifted = jacobi_elliptic(u + 4.0 * elliptic_K(m), m);
      periodicity = std::max({periodicity, std::fabs(shifted.sn - jt.sn),
                              std::fabs(shifted.cn - jt.cn), std::fabs(shifted.dn - jt.dn)});
    }
  }
  const double e_lhs = elliptic_E(0.75);
  const double e_rhs =
      (2.0 * elliptic_E(1.0 / 9.0) - 8.0 / 9.0 * elliptic_K(1.0 / 9.0)) * 3.0 / 4.0;

  rep.lines.push_back(line("sn imaginary modulus relation", im_sn, 1e-10, tol));
  rep.lines.push_back(line("K imaginary modulus relation", im_K, 1e-10, tol));
  rep.lines.push_back(line("sn ascending Landen relation", landen_sn, 1e-10, tol));
  rep.lines.push_back(line("K Landen relation", landen_K, 1e-10, tol));
  rep.lines.push_back(line("E Landen relation at k = 1/3", std::fabs(e_lhs - e_rhs), 1e-10, tol));
  rep.lines.push_back(line("sn^2 + cn^2 = 1", sq_sum, 1e-10, tol));
  rep.lines.push_back(line("dn^2 + m sn^2 = 1", dn_sum, 1e-10, tol));
  rep.lines.push_back(line("period 4K", periodicity, 1e-9, tol));
  finish(rep);
  return rep;
}

VerifyReport verify_minimal(const std::vector<NamedSurface>& surfaces,
                            std::optional<double> tol) {
  VerifyReport rep;
  rep.suite = "minimal";
  const double two_pi = 2.0 * std::numbers::pi;
  for (const NamedSurface& s : surfaces) {
    const double r =
        max_minimality_residual(s.fn, {0.0, two_pi}, {0.0, two_pi}, 10, 10);
    rep.lines.push_back(line(s.name + " residual sup |delta x - 2x|", r, 1e-4, tol));
  }
  finish(rep);
  return rep;
}

VerifyReport verify_isometry(const std::vector<LawsonPair>& pairs, std::optional<double> tol) {
  VerifyReport rep;
  rep.suite = "isometry";
  for (const LawsonPair& p : pairs) {
    rep.lines.push_back(
        line(pair_tag(p) + " metric discrepancy 50x50", isometry_discrepancy(p, 50, 50), 1e-8,
             tol));
    const DomainCorrespondenceReport dom = domain_correspondence_check(p);
    const double extents = std::max(dom.checks[0].error(), dom.checks[1].error());
    rep.lines.push_back(line(pair_tag(p) + " domain extents", extents, 1e-10, tol));
    rep.lines.push_back(
        line(pair_tag(p) + " amplitude winding sweep", dom.checks[2].error(), 1e-6, tol));
  }
  finish(rep);
  return rep;
}

VerifyReport verify_area(const std::vector<GeneralizedTriple>& triples,
                         std::optional<double> tol) {
  VerifyReport rep;
  rep.suite = "area";
  for (const GeneralizedTriple& t : triples) {
    const double quad = square_integral_quadrature(t, 256, 256);
    const double closed = S_abc(t);
    rep.lines.push_back(
        line(triple_tag(t) + " quadrature vs closed square integral",
             std::fabs(quad - closed), 1e-8, tol));
  }
  finish(rep);
  return rep;
}

std::vector<NamedSurface> default_minimal_surfaces() {
  std::vector<NamedSurface> out;
  out.push_back({"tau(2,1)", lawson_surface(LawsonPair(2, 1))});
  out.push_back({"tau(3,1)", lawson_surface(LawsonPair(3, 1))});
  out.push_back({"bipolar(2,1)", bipolar_surface(LawsonPair(2, 1))});
  out.push_back({"bipolar(3,1)", bipolar_surface(LawsonPair(3, 1))});
  out.push_back({"T(1,0,2)", generalized_surface(GeneralizedTriple(1, 0, 2))});
  out.push_back({"T(1,1,2)", generalized_surface(GeneralizedTriple(1, 1, 2))});
  out.push_back({"T(1,2,4)", generalized_surface(GeneralizedTriple(1, 2, 4))});
  out.push_back({"T(1,1,3)", generalized_surface(GeneralizedTriple(1, 1, 3))});
  return out;
}

std::vector<LawsonPair> default_isometry_pairs() {
  return {LawsonPair(2, 1), LawsonPair(4, 1), LawsonPair(3, 2), LawsonPair(5, 1),
          LawsonPair(9, 5), LawsonPair(3, 1), LawsonPair(7, 5)};
}

std::vector<GeneralizedTriple> default_area_triples() {
  std::vector<GeneralizedTriple> out;
  for (const GeneralizedTriple& t : canonical_triples_with_sum_at_most(9))
    if (t.regime() == Regime::interior) out.push_back(t);
  return out;
}

std::string format_report(const VerifyReport& report) {
  std::string out = "suite: " + report.suite + "\n";
  for (const CheckLine& l : report.lines) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "  measured %.3e  tol %.1e\n", l.measured, l.tolerance);
    out += (l.pass ? "  PASS  " : "  FAIL  ") + l.name + buf;
  }
  out += report.pass ? "result: PASS\n" : "result: FAIL\n";
  return out;
}

}  // namespace lawson
