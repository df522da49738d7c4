// diffgeo.cpp

#include "lawson/diffgeo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace lawson {

namespace {

// 8-point Gauss–Legendre nodes/weights on [-1, 1].
constexpr double kGlNode[8] = {
    -0.96028985649753623, -0.79666647741362674, -0.52553240991632899, -0.18343464249564980,
    0.18343464249564980,  0.52553240991632899,  0.79666647741362674,  0.96028985649753623};
constexpr double kGlWeight[8] = {
    0.10122853629037626, 0.22238103445337447, 0.31370664587788729, 0.36268378337836198,
    0.36268378337836198, 0.31370664587788729, 0.22238103445337447, 0.10122853629037626};

// Serial combine of per-row partials keeps parallel results bitwise equal to
// the serial ones: each row is summed in index order by exactly one thread.
template <typename RowFn>
double sum_rows(int ny, Exec exec, RowFn&& row_value) {
  static_cast<void>(exec);  // no-op without OpenMP
  std::vector<double> rows(static_cast<std::size_t>(ny));
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
#endif
  for (int j = 0; j < ny; ++j) rows[static_cast<std::size_t>(j)] = row_value(j);
  double total = 0.0;
  for (int j = 0; j < ny; ++j) total += rows[static_cast<std::size_t>(j)];
  return total;
}

template <typename RowFn>
double max_rows(int ny, Exec exec, RowFn&& row_value) {
  static_cast<void>(exec);
  std::vector<double> rows(static_cast<std::size_t>(ny));
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
#endif
  for (int j = 0; j < ny; ++j) rows[static_cast<std::size_t>(j)] = row_value(j);
  double worst = 0.0;
  for (int j = 0; j < ny; ++j) worst = std::max(worst, rows[static_cast<std::size_t>(j)]);
  return worst;
}

AmbientPoint partial_u(const SurfaceFn& f, double u, double v, double h) {
  const AmbientPoint a = f(u + h, v), b = f(u - h, v);
  AmbientPoint d;
  d.dim = a.dim;
  for (int i = 0; i < a.dim; ++i) d.x[static_cast<std::size_t>(i)] = (a[i] - b[i]) / (2.0 * h);
  return d;
}

AmbientPoint partial_v(const SurfaceFn& f, double u, double v, double h) {
  const AmbientPoint a = f(u, v + h), b = f(u, v - h);
  AmbientPoint d;
  d.dim = a.dim;
  for (int i = 0; i < a.dim; ++i) d.x[static_cast<std::size_t>(i)] = (a[i] - b[i]) / (2.0 * h);
  return d;
}

// Plain central-difference form, no extrapolation.  Used inside the
// divergence form so the total operator has a clean h^2 expansion that the
// single outer Richardson level removes.
Metric2 metric_fd_plain(const SurfaceFn& f, double u, double v, double h) {
  const AmbientPoint fu = partial_u(f, u, v, h);
  const AmbientPoint fv = partial_v(f, u, v, h);
  return Metric2{dot(fu, fu), dot(fu, fv), dot(fv, fv)};
}

struct Flux {
  AmbientPoint p;  // sqrt(g) (g^{uu} f_u + g^{uv} f_v)
  AmbientPoint q;  // sqrt(g) (g^{uv} f_u + g^{vv} f_v)
};

Flux flux_at(const SurfaceFn& f, double u, double v, double h) {
  const Metric2 g = metric_fd_plain(f, u, v, h);
  const double det = g.det();
  if (det <= 0.0) throw DegeneracyError("metric degenerate in flux evaluation");
  const double rt = std::sqrt(det);
  // inverse metric times sqrt(det)
  const double iuu = g.G / rt, iuv = -g.F / rt, ivv = g.E / rt;
  const AmbientPoint fu = partial_u(f, u, v, h);
  const AmbientPoint fv = partial_v(f, u, v, h);
  Flux out;
  out.p.dim = fu.dim;
  out.q.dim = fu.dim;
  for (int i = 0; i < fu.dim; ++i) {
    out.p.x[static_cast<std::size_t>(i)] = iuu * fu[i] + iuv * fv[i];
    out.q.x[static_cast<std::size_t>(i)] = iuv * fu[i] + ivv * fv[i];
  }
  return out;
}

AmbientPoint laplace_once(const SurfaceFn& f, double u, double v, double h) {
  const Flux pu = flux_at(f, u + h, v, h);
  const Flux mu = flux_at(f, u - h, v, h);
  const Flux pv = flux_at(f, u, v + h, h);
  const Flux mv = flux_at(f, u, v - h, h);
  const Metric2 g0 = metric_fd_plain(f, u, v, h);
  const double rt0 = std::sqrt(g0.det());
  AmbientPoint out;
  out.dim = pu.p.dim;
  for (int i = 0; i < out.dim; ++i) {
    const double div =
        (pu.p[i] - mu.p[i]) / (2.0 * h) + (pv.q[i] - mv.q[i]) / (2.0 * h);
    out.x[static_cast<std::size_t>(i)] = -div / rt0;
  }
  return out;
}

}  // namespace

Metric2 generalized_metric(int a, int b, int c, double y) {
  const double ba = static_cast<double>(b) * b - static_cast<double>(a) * a;
  const double c2 = static_cast<double>(c) * c;
  const double cos2y = std::cos(2.0 * y);
  const double num = c2 + ba * cos2y;
  const double den = 2.0 * c2 - static_cast<double>(a) * a - static_cast<double>(b) * b +
                     ba * cos2y;
  if (den <= 0.0) throw DegeneracyError("metric denominator vanished");
  return Metric2{0.5 * num, 0.0, num / den};
}

Metric2 generalized_metric(const GeneralizedTriple& t, double y) {
  return generalized_metric(t.a(), t.b(), t.c(), y);
}

Metric2 bipolar_metric(int r, int m, double v) {
  const double r2 = static_cast<double>(r) * r, m2 = static_cast<double>(m) * m;
  const double sv = std::sin(v);
  const double q = r2 - (r2 - m2) * sv * sv;
  const double e = (q * q + r2 * m2) / q;
  return Metric2{e, 0.0, e / q};
}

Metric2 bipolar_metric(const LawsonPair& p, double v) { return bipolar_metric(p.r(), p.m(), v); }

Metric2 first_fundamental_form_fd(const SurfaceFn& f, double u, double v, double h) {
  const Metric2 c = metric_fd_plain(f, u, v, h);
  const Metric2 fine = metric_fd_plain(f, u, v, 0.5 * h);
  return Metric2{(4.0 * fine.E - c.E) / 3.0, (4.0 * fine.F - c.F) / 3.0,
                 (4.0 * fine.G - c.G) / 3.0};
}

double metric_area_trapezoid(const MetricField& g, Interval x_range, Interval y_range, int nx,
                             int ny, Exec exec) {
  if (nx < 1 || ny < 1) throw InvalidParams("quadrature needs nx, ny >= 1");
  const double hx = x_range.length() / nx, hy = y_range.length() / ny;
  const double total = sum_rows(ny, exec, [&](int j) {
    const double y = y_range.lo + j * hy;
    double s = 0.0;
    for (int i = 0; i < nx; ++i) {
      const double x = x_range.lo + i * hx;
      s += std::sqrt(g(x, y).det());
    }
    return s;
  });
  return total * hx * hy;
}

double metric_area_gauss(const MetricField& g, Interval x_range, Interval y_range, int nx, int ny,
                         Exec exec) {
  if (nx < 1 || ny < 1) throw InvalidParams("quadrature needs nx, ny >= 1");
  const double wx = x_range.length() / nx, wy = y_range.length() / ny;
  const double total = sum_rows(ny, exec, [&](int jp) {
    const double y0 = y_range.lo + jp * wy;
    double s = 0.0;
    for (int jq = 0; jq < 8; ++jq) {
      const double y = y0 + 0.5 * wy * (1.0 + kGlNode[jq]);
      double sx = 0.0;
      for (int ip = 0; ip < nx; ++ip) {
        const double x0 = x_range.lo + ip * wx;
        for (int iq = 0; iq < 8; ++iq) {
          const double x = x0 + 0.5 * wx * (1.0 + kGlNode[iq]);
          sx += kGlWeight[iq] * std::sqrt(g(x, y).det());
        }
      }
      s += kGlWeight[jq] * sx;
    }
    return s;
  });
  return total * 0.25 * wx * wy;
}

double square_integral_quadrature(const GeneralizedTriple& t, int nx, int ny, Exec exec) {
  const double two_pi = 2.0 * std::numbers::pi;
  const MetricField g = [&t](double, double y) { return generalized_metric(t, y); };
  return metric_area_trapezoid(g, {0.0, two_pi}, {0.0, two_pi}, nx, ny, exec);
}

double area_quadrature(const GeneralizedTriple& t, int nx, int ny, Exec exec) {
  return square_integral_quadrature(t, nx, ny, exec) / fundamental_domain(t).covering_degree;
}

AmbientPoint laplace_beltrami(const SurfaceFn& f, double u, double v, double h) {
  const AmbientPoint coarse = laplace_once(f, u, v, h);
  const AmbientPoint fine = laplace_once(f, u, v, 0.5 * h);
  AmbientPoint out;
  out.dim = coarse.dim;
  for (int i = 0; i < out.dim; ++i)
    out.x[static_cast<std::size_t>(i)] = (4.0 * fine[i] - coarse[i]) / 3.0;
  return out;
}

double minimality_residual(const SurfaceFn& f, double u, double v, double h) {
  const AmbientPoint lap = laplace_beltrami(f, u, v, h);
  const AmbientPoint x = f(u, v);
  double worst = 0.0;
  for (int i = 0; i < x.dim; ++i) worst = std::max(worst, std::fabs(lap[i] - 2.0 * x[i]));
  return worst;
}

double max_minimality_residual(const SurfaceFn& f, Interval u_range, Interval v_range, int nu,
                               int nv, double h, Exec exec) {
  if (nu < 1 || nv < 1) throw InvalidParams("residual scan needs nu, nv >= 1");
  const double du = u_range.length() / nu, dv = v_range.length() / nv;
  return max_rows(nv, exec, [&](int j) {
    const double v = v_range.lo + (j + 0.5) * dv;
    double worst = 0.0;
    for (int i = 0; i < nu; ++i) {
      const double u = u_range.lo + (i + 0.5) * du;
      worst = std::max(worst, minimality_residual(f, u, v, h));
    }
    return worst;
  });
}

double hyperplane_check(const LawsonPair& p, int n_samples) {
  if (n_samples < 1) throw InvalidParams("hyperplane check needs n_samples >= 1");
  const int nu = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n_samples))));
  const int nv = (n_samples + nu - 1) / nu;
  const double two_pi = 2.0 * std::numbers::pi;
  double worst = 0.0;
  for (int j = 0; j < nv; ++j) {
    const double v = (j + 0.5) * two_pi / nv;
    for (int i = 0; i < nu; ++i) {
      const double u = (i + 0.5) * two_pi / nu;
      const AmbientPoint q = bipolar_immersion(p, u, v);
      worst = std::max(worst, std::fabs(p.r() * q[0] + p.m() * q[1]));
    }
  }
  return worst;
}

SurfaceFn perturbed_control_surface() {
  return [](double u, double v) {
    AmbientPoint p;
    p.dim = 4;
    p.x = {std::cos(u) * std::cos(v), std::sin(u) * std::cos(v), std::sin(v),
           0.1 * std::sin(2.0 * u), 0.0, 0.0};
    const double n = p.norm();
    for (int i = 0; i < 4; ++i) p.x[static_cast<std::size_t>(i)] /= n;
    return p;
  };
}

}  // namespace lawson
