// isometry.cpp

#include "lawson/isometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace lawson {

namespace {

constexpr double kBranchMargin = 1e-3;

// Continuous amplitude: am(z, m) reconstructed from sn by unwinding the
// arcsin branch every half period 2K.
double amplitude(double z, double quarter_period, double param) {
  const double sn = jacobi_elliptic(z, param).sn;
  if (std::fabs(sn) > 1.0 + 1e-12) throw BranchError("sn overflowed the arcsin branch");
  const double clamped = std::clamp(sn, -1.0, 1.0);
  const double n = std::floor(z / (2.0 * quarter_period) + 0.5);
  const double sign = (std::fmod(n, 2.0) == 0.0) ? 1.0 : -1.0;
  return n * std::numbers::pi + sign * std::asin(clamped);
}

double nudged(double w, double lo, double hi, double line) {
  if (std::fabs(w - line) < kBranchMargin)
    return std::min(hi - kBranchMargin, std::max(lo + kBranchMargin, line + kBranchMargin));
  return w;
}

}  // namespace

ChangeOfVariables build_change_of_variables(const LawsonPair& p) {
  const GeneralizedTriple t = to_generalized(p);
  const int a0 = t.b(), c = t.c();
  const double ca = static_cast<double>(c) * c - static_cast<double>(a0) * a0;
  const double r2 = static_cast<double>(p.r()) * p.r();
  const double m2 = static_cast<double>(p.m()) * p.m();
  ChangeOfVariables cov{
      .pair = p,
      .parity_case = p.parity_case(),
      .triple = t,
      .a0 = a0,
      .c = c,
      .k_param = -static_cast<double>(a0) * a0 / ca,
      .ktilde_param = (r2 - m2) / r2,
      .x_scale = p.parity_case() == PairCase::rm_even ? 1 : 2,
      .z_scale = 2.0 * std::sqrt(ca) / (a0 + c),
      .z_offset = 0.0,
      .K_k = 0.0,
      .K_ktilde = 0.0,
  };
  cov.K_k = elliptic_K(cov.k_param);
  cov.z_offset = cov.K_k;
  cov.K_ktilde = elliptic_K(cov.ktilde_param);
  return cov;
}

SurfaceCoords map_bipolar_to_T(const ChangeOfVariables& cov, double u, double w) {
  const double z = cov.z_scale * w + cov.z_offset;
  return SurfaceCoords{cov.x_scale * u, amplitude(z, cov.K_k, cov.k_param), z};
}

double isometry_discrepancy(const LawsonPair& p, int nu, int nw, Exec exec) {
  if (nu < 1 || nw < 1) throw InvalidParams("discrepancy grid must be at least 1x1");
  const ChangeOfVariables cov = build_change_of_variables(p);
  const double r2 = static_cast<double>(p.r()) * p.r();
  const double m2 = static_cast<double>(p.m()) * p.m();
  const double u_len = 2.0 * std::numbers::pi / cov.x_scale;
  const double w_len = 2.0 * cov.K_ktilde;

  std::vector<double> rows(static_cast<std::size_t>(nw));
  static_cast<void>(exec);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
#endif
  for (int j = 0; j < nw; ++j) {
    double w = (j + 0.5) * w_len / nw;
    w = nudged(w, 0.0, w_len, 0.0);
    w = nudged(w, 0.0, w_len, cov.K_ktilde);
    w = nudged(w, 0.0, w_len, w_len);

    // bipolar metric in (u, w): sin v = sn(w, kt), dv = dn(w, kt) dw
    const JacobiTriple jt = jacobi_elliptic(w, cov.ktilde_param);
    const double q = r2 - (r2 - m2) * jt.sn * jt.sn;
    const double e_t = (q * q + r2 * m2) / q;
    const double g_t_ww = (e_t / q) * jt.dn * jt.dn;

    double worst = 0.0;
    for (int i = 0; i < nu; ++i) {
      const double u = (i + 0.5) * u_len / nu;
      const SurfaceCoords s = map_bipolar_to_T(cov, u, w);
      const Metric2 g = generalized_metric(cov.a0, 0, cov.c, s.y);
      const double dy_dz = jacobi_elliptic(s.z, cov.k_param).dn;
      const double pb_uu = g.E * cov.x_scale * cov.x_scale;
      const double pb_ww = g.G * dy_dz * dy_dz * cov.z_scale * cov.z_scale;
      worst = std::max(worst, std::fabs(pb_uu - e_t));
      worst = std::max(worst, std::fabs(pb_ww - g_t_ww));
    }
    rows[static_cast<std::size_t>(j)] = worst;
  }
  double out = 0.0;
  for (int j = 0; j < nw; ++j) out = std::max(out, rows[static_cast<std::size_t>(j)]);
  return out;
}

double intermediate_display_residual(const LawsonPair& p, int n) {
  if (n < 1) throw InvalidParams("need at least one sample");
  const ChangeOfVariables cov = build_change_of_variables(p);
  const double r2 = static_cast<double>(p.r()) * p.r();
  const double m2 = static_cast<double>(p.m()) * p.m();
  const double w_len = 2.0 * cov.K_ktilde;
  double worst = 0.0;
  for (int j = 0; j < n; ++j) {
    const double w = (j + 0.5) * w_len / n;
    const double z = cov.z_scale * w + cov.z_offset;
    const double sn_z = jacobi_elliptic(z, cov.k_param).sn;
    const double a2 = static_cast<double>(cov.a0) * cov.a0;
    const double c2 = static_cast<double>(cov.c) * cov.c;
    const double lhs =
        cov.x_scale * cov.x_scale * 0.5 * (c2 - a2 + 2.0 * a2 * sn_z * sn_z);
    const double sn_w = jacobi_elliptic(w, cov.ktilde_param).sn;
    const double q = r2 - (r2 - m2) * sn_w * sn_w;
    const double rhs = (q * q + r2 * m2) / q;
    worst = std::max(worst, std::fabs(lhs - rhs));
  }
  return worst;
}

double tangent_isometry_error(const ChangeOfVariables& cov, double u, double w, double xi_u,
                              double xi_w, double h) {
  const double r2 = static_cast<double>(cov.pair.r()) * cov.pair.r();
  const double m2 = static_cast<double>(cov.pair.m()) * cov.pair.m();

  const JacobiTriple jt = jacobi_elliptic(w, cov.ktilde_param);
  const double q = r2 - (r2 - m2) * jt.sn * jt.sn;
  const double e_t = (q * q + r2 * m2) / q;
  const double gt_len = e_t * xi_u * xi_u + (e_t / q) * jt.dn * jt.dn * xi_w * xi_w;

  const SurfaceCoords c0 = map_bipolar_to_T(cov, u, w);
  const SurfaceCoords cp = map_bipolar_to_T(cov, u, w + h);
  const SurfaceCoords cm = map_bipolar_to_T(cov, u, w - h);
  const double dx_du = cov.x_scale;  // x is linear in u, exact
  const double dy_dw = (cp.y - cm.y) / (2.0 * h);
  const Metric2 g = generalized_metric(cov.a0, 0, cov.c, c0.y);
  const double img_u = dx_du * xi_u;
  const double img_w = dy_dw * xi_w;
  const double g_len = g.E * img_u * img_u + g.G * img_w * img_w;

  return std::fabs(g_len - gt_len) / gt_len;
}

TransportedAreas transported_areas(const LawsonPair& p, int nx, int ny, Exec exec) {
  const ChangeOfVariables cov = build_change_of_variables(p);
  const double two_pi = 2.0 * std::numbers::pi;
  // one-to-one extents: (2pi, pi, pi/2) in u by parity case, halved again in
  // x for the Klein bottle image
  const double u_len = cov.parity_case == PairCase::rm_even      ? two_pi
                       : cov.parity_case == PairCase::rm_1_mod_4 ? std::numbers::pi
                                                                 : 0.5 * std::numbers::pi;
  const double x_len = u_len * cov.x_scale;

  const double r2 = static_cast<double>(p.r()) * p.r();
  const double m2 = static_cast<double>(p.m()) * p.m();
  const MetricField bip = [&](double, double w) {
    const JacobiTriple jt = jacobi_elliptic(w, cov.ktilde_param);
    const double q = r2 - (r2 - m2) * jt.sn * jt.sn;
    const double e_t = (q * q + r2 * m2) / q;
    return Metric2{e_t, 0.0, (e_t / q) * jt.dn * jt.dn};
  };
  const MetricField gen = [&](double, double y) {
    return generalized_metric(cov.a0, 0, cov.c, y);
  };

  TransportedAreas out;
  out.bipolar = metric_area_gauss(bip, {0.0, u_len}, {0.0, 2.0 * cov.K_ktilde}, nx, ny, exec);
  // image of z in [K, 5K) under y = am(z, k) is a full 2pi period of y
  const double y_lo = 0.5 * std::numbers::pi;
  out.generalized = metric_area_gauss(gen, {0.0, x_len}, {y_lo, y_lo + two_pi}, nx, ny, exec);
  return out;
}

DomainCorrespondenceReport domain_correspondence_check(const LawsonPair& p) {
  DomainCorrespondenceReport rep{.cov = build_change_of_variables(p), .checks = {}, .pass = false};
  const ChangeOfVariables& cov = rep.cov;
  const double two_pi = 2.0 * std::numbers::pi;

  ExtentCheck z_extent;
  z_extent.name = "affine image of [K(k), 5K(k)) has length 2K(kt)";
  z_extent.measured = 4.0 * cov.K_k / cov.z_scale;
  z_extent.expected = 2.0 * cov.K_ktilde;
  z_extent.pass = z_extent.error() < 1e-10;
  rep.checks.push_back(z_extent);

  ExtentCheck x_extent;
  x_extent.name = "one-to-one u-extent per parity case";
  const double t_side = (cov.triple.topology() == Topology::klein_bottle ? std::numbers::pi
                                                                         : two_pi);
  x_extent.measured = t_side / cov.x_scale;
  x_extent.expected = cov.parity_case == PairCase::rm_even      ? two_pi
                      : cov.parity_case == PairCase::rm_1_mod_4 ? std::numbers::pi
                                                                : 0.5 * std::numbers::pi;
  x_extent.pass = x_extent.error() < 1e-10;
  rep.checks.push_back(x_extent);

  ExtentCheck branch;
  branch.name = "amplitude sweeps one full period over [K, 5K)";
  branch.measured = amplitude(5.0 * cov.K_k - 1e-9, cov.K_k, cov.k_param) -
                    amplitude(cov.K_k, cov.K_k, cov.k_param);
  branch.expected = two_pi;  // up to the 1e-9 clip of the open endpoint
  branch.pass = std::fabs(branch.measured - branch.expected) < 1e-6;
  rep.checks.push_back(branch);

  rep.pass = true;
  for (const ExtentCheck& c : rep.checks) rep.pass = rep.pass && c.pass;
  return rep;
}

}  // namespace lawson
