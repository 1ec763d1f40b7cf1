#include "hglens/lens_metrics.hpp"

#include <array>
#include <cmath>
#include <string>

#include "hglens/error.hpp"
#include "hglens/numerics.hpp"

namespace hglens {

namespace {

constexpr std::array<PublishedRow, 17> kPublished{{
    {1, 1.00, 0.048, 1},   {3, 3.24, 1.6, 34},    {5, 4.75, 5.1, 107},  {7, 5.74, 9.1, 190},
    {9, 6.45, 13, 269},    {11, 7.00, 16, 344},   {13, 7.42, 20, 411},  {15, 7.78, 23, 472},
    {17, 8.06, 25, 526},   {19, 8.32, 28, 576},   {21, 8.53, 30, 620},  {23, 8.70, 32, 662},
    {25, 8.87, 33, 699},   {27, 9.01, 35, 735},   {29, 9.15, 37, 766},  {31, 9.27, 38, 795},
    {33, 9.36, 39, 825},
}};

// Relative deviation in terms of xi: |(f(xi) / (f'(0) xi))^2 - 1|.
double deviation_at_xi(const ModeSuperposition& s, double slope, double xi) {
  const double ratio = focal_profile(s, xi) / (slope * xi);
  return std::abs(ratio * ratio - 1.0);
}

}  // namespace

double focal_curvature(const ModeSuperposition& s, const BeamGeometry& geom) {
  const double w = geom.waist_x();
  const double slope = focal_slope(s);
  return 2.0 * std::sqrt(2.0) * slope * slope / (w * w * w);
}

double parabola_deviation(const ModeSuperposition& s, double x, const BeamGeometry& geom) {
  const double a = focal_curvature(s, geom);
  return std::abs(integrated_intensity(s, x, 0.0, geom) - a * x * x) / (a * x * x);
}

double deviation_mark(const ModeSuperposition& s, const BeamGeometry& geom, double tol) {
  if (!(tol > 0.0 && tol < 0.1)) {
    throw ArgumentError("deviation_mark: tolerance must lie in (0, 0.1)");
  }
  // Everything is scale-free in xi = sqrt2 x / w0x.
  const double slope = focal_slope(s);
  const double xi_step = std::sqrt(2.0) / 400.0;
  const double xi_limit = std::sqrt(2.0) * outermost_turning_point(s, BeamGeometry::reduced());

  // The deviation vanishes at the axis, so lo = 0 is always below tol.
  double lo = 0.0;
  double hi = xi_step;
  while (deviation_at_xi(s, slope, hi) < tol) {
    lo = hi;
    hi += xi_step;
    if (hi > xi_limit) {
      throw NumericError("deviation_mark: deviation stays below tolerance up to the outermost "
                         "turning point for order " + std::to_string(s.max_order()));
    }
  }
  for (int it = 0; it < 200 && (hi - lo) > 1e-12 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (deviation_at_xi(s, slope, mid) < tol ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi) * geom.waist_x() / std::sqrt(2.0);
}

double power_fraction(const ModeSuperposition& s, double d, const BeamGeometry& geom) {
  if (!(d > 0.0)) throw ArgumentError("power_fraction: d must be positive");
  const double w = geom.waist_x();
  auto density = [&](double xi) {
    const double f = focal_profile(s, xi);
    return f * f;
  };
  // Beyond |xi| = 12 + sqrt(2N+1) the Gaussian tail is below 1e-30.
  const double xi_d = std::sqrt(2.0) * d / w;
  const double xi_far = 12.0 + std::sqrt(2.0 * s.max_order() + 1.0);
  if (xi_d >= xi_far) return 1.0;
  return integrate(density, -xi_d, xi_d, 1e-13);
}

double power_compensation(int cutoff) {
  const double s1 = focal_slope(ModeSuperposition::single_mode());
  const double sn = focal_slope(solve_coefficients(cutoff));
  return (s1 / sn) * (s1 / sn);
}

double rayleigh_match(int cutoff) {
  const auto g = BeamGeometry::reduced();
  const double a1 = focal_curvature(ModeSuperposition::single_mode(), g);
  const double an = focal_curvature(solve_coefficients(cutoff), g);
  return std::cbrt(an / a1);
}

LensMetrics lens_metrics(int cutoff, double tol) {
  const auto geom = BeamGeometry::reduced();
  const auto s = solve_coefficients(cutoff);
  const auto single = ModeSuperposition::single_mode();

  LensMetrics m;
  m.order = s.max_order();
  m.curvature = focal_curvature(s, geom);
  m.deviation_mark = deviation_mark(s, geom, tol);
  m.power_fraction = power_fraction(s, m.deviation_mark, geom);
  const double a1 = focal_curvature(single, geom);
  m.power_ratio = a1 / m.curvature;
  m.rayleigh_scale = std::cbrt(m.curvature / a1);
  m.turning_point = outermost_turning_point(s, geom);
  return m;
}

std::vector<Table1Row> table1(int max_order, double tol) {
  if (max_order < 1 || max_order % 2 == 0) {
    throw ArgumentError("table1: max_order must be odd and positive");
  }
  std::vector<int> cutoffs;
  for (int j = 0; 2 * j + 1 <= max_order; ++j) cutoffs.push_back(j);
  const auto metrics = parallel_map(cutoffs, [tol](int j) { return lens_metrics(j, tol); });

  // Matched curvature: the waist of order N becomes sigma_N w0, so its mark
  // scales by the same factor while the power fraction is unchanged.
  const auto& base = metrics.front();
  const double d1 = base.deviation_mark * base.rayleigh_scale;
  std::vector<Table1Row> rows;
  rows.reserve(metrics.size());
  for (const auto& m : metrics) {
    Table1Row r;
    r.order = m.order;
    r.d_ratio = m.deviation_mark * m.rayleigh_scale / d1;
    r.power_percent = 100.0 * m.power_fraction;
    r.power_gain = m.power_fraction / base.power_fraction;
    r.metrics = m;
    rows.push_back(r);
  }
  return rows;
}

std::span<const PublishedRow> published_table1() { return kPublished; }

}  // namespace hglens
