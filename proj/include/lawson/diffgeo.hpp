// diffgeo.hpp
// Induced metrics (closed form and finite-difference), area quadrature, and
// the coordinate-eigenfunction minimality test Delta x = 2x.

#ifndef LAWSON_DIFFGEO_HPP
#define LAWSON_DIFFGEO_HPP

#include <functional>

#include "lawson/exec.hpp"
#include "lawson/surfaces.hpp"

namespace lawson {

// First fundamental form: ds^2 = E dx^2 + 2F dx dy + G dy^2.
struct Metric2 {
  double E, F, G;
  double det() const { return E * G - F * F; }
};

using MetricField = std::function<Metric2(double, double)>;

// Closed-form metric of the generalized family, in the slot order given.
// The order matters: swapping a and b shifts the metric by a quarter period
// in y, so callers doing pullbacks must pass the order they parametrized.
Metric2 generalized_metric(int a, int b, int c, double y);
Metric2 generalized_metric(const GeneralizedTriple& t, double y);

// Closed-form metric of the bipolar surface in (u, v).
Metric2 bipolar_metric(int r, int m, double v);
Metric2 bipolar_metric(const LawsonPair& p, double v);

// Metric from an immersion by central differences with one Richardson level.
Metric2 first_fundamental_form_fd(const SurfaceFn& f, double u, double v, double h = 1e-4);

// Integral of sqrt(det g) over x_range × y_range with nx × ny nodes,
// periodic trapezoid rule.  Spectrally accurate when the ranges are full
// periods of a smooth integrand, which holds for every full-square area in
// this library.
double metric_area_trapezoid(const MetricField& g, Interval x_range, Interval y_range, int nx,
                             int ny, Exec exec = Exec::serial);

// Same integral over composite 8-point Gauss–Legendre panels (nx × ny of
// them); the right rule for sub-rectangles that are not full periods.
double metric_area_gauss(const MetricField& g, Interval x_range, Interval y_range, int nx, int ny,
                         Exec exec = Exec::serial);

// Raw [0,2pi)^2 integral of the generalized area element (no degree division).
double square_integral_quadrature(const GeneralizedTriple& t, int nx, int ny,
                                  Exec exec = Exec::serial);

// Surface area: the raw square integral divided by the covering degree.
double area_quadrature(const GeneralizedTriple& t, int nx, int ny, Exec exec = Exec::serial);

// Geometer's Laplace–Beltrami of each ambient component, divergence form,
// from the immersion alone.  Outer and inner differences share the step h;
// one Richardson level (h, h/2) on top.
AmbientPoint laplace_beltrami(const SurfaceFn& f, double u, double v, double h = 2e-3);

// max_i |(Delta f)_i - 2 f_i|.  Zero iff the immersion is minimal in the
// unit sphere.
double minimality_residual(const SurfaceFn& f, double u, double v, double h = 2e-3);

// Max residual over the nu × nv midpoint grid of u_range × v_range.
double max_minimality_residual(const SurfaceFn& f, Interval u_range, Interval v_range, int nu,
                               int nv, double h = 2e-3, Exec exec = Exec::serial);

// Max of |r x1 + m x2| over >= n_samples points of the bipolar immersion.
double hyperplane_check(const LawsonPair& p, int n_samples);

// Deliberately non-minimal surface used to confirm test sensitivity: the
// equatorial 2-sphere graph with 0.1 sin(2u) injected into slot 4, then
// renormalized onto S^3.
SurfaceFn perturbed_control_surface();

}  // namespace lawson

#endif
