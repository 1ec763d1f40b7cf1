#pragma once

// Quality figures of a superposition lens: focal curvature, the 0.74 %
// deviation mark, useful power fraction, and the two ways of matching
// refractive power across orders (more power, or a tighter x focus).

#include <span>
#include <vector>

#include "hglens/modes.hpp"
#include "hglens/superposition.hpp"

namespace hglens {

inline constexpr double kDeviationTolerance = 0.0074;

struct LensMetrics {
  int order = 1;
  double curvature = 0.0;        // A with I(x,0) ~ A x^2 near the axis
  double deviation_mark = 0.0;   // d, same length unit as the geometry
  double power_fraction = 0.0;   // share of total power inside |x| < d
  double power_ratio = 1.0;      // P_{2J+1} / P_1 for equal curvature
  double rayleigh_scale = 1.0;   // waist factor sigma matching Psi_1's curvature
  double turning_point = 0.0;    // outermost maximum of the focal profile
};

/// A = (sqrt2 / w0x) |d_x f(0)|^2 = 2 sqrt2 f'(0)^2 / w0x^3.
[[nodiscard]] double focal_curvature(const ModeSuperposition& s, const BeamGeometry& geom);

/// |I(x,0) - A x^2| / (A x^2).
[[nodiscard]] double parabola_deviation(const ModeSuperposition& s, double x,
                                        const BeamGeometry& geom);

/// Smallest x > 0 where parabola_deviation reaches `tol`. Scans outward in
/// steps of w0x/400 and bisects to 1e-10 relative.
[[nodiscard]] double deviation_mark(const ModeSuperposition& s, const BeamGeometry& geom,
                                    double tol = kDeviationTolerance);

/// Fraction of the (unit) beam power carried by |x| < d.
[[nodiscard]] double power_fraction(const ModeSuperposition& s, double d, const BeamGeometry& geom);

/// P_{2J+1} / P_1 = |f_1'(0) / f_{2J+1}'(0)|^2 at equal waists.
[[nodiscard]] double power_compensation(int cutoff);

/// Waist factor sigma = (A_{2J+1} / A_1)^{1/3}; z_Rx scales by sigma^2.
[[nodiscard]] double rayleigh_match(int cutoff);

/// All figures for one cutoff in reduced units (w0x = 1).
[[nodiscard]] LensMetrics lens_metrics(int cutoff, double tol = kDeviationTolerance);

struct Table1Row {
  int order = 1;
  double d_ratio = 1.0;        // d_{2J+1} / d_1 at matched curvature
  double power_percent = 0.0;  // 100 * power fraction
  double power_gain = 1.0;     // power fraction relative to Psi_1
  LensMetrics metrics;
};

/// Lens parameters for orders 1, 3, ..., max_order at equal power and
/// curvature matched to Psi_1 through the x waist. Orders run in parallel.
[[nodiscard]] std::vector<Table1Row> table1(int max_order = 33, double tol = kDeviationTolerance);

/// Literature values of the lens-parameter table for orders 1..33.
struct PublishedRow {
  int order;
  double d_ratio;
  double power_percent;
  double power_gain;
};

[[nodiscard]] std::span<const PublishedRow> published_table1();

}  // namespace hglens
