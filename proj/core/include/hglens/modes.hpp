#pragma once

// Hermite functions and paraxial Hermite-Gaussian beam modes.
//
// Lengths are in whatever unit the BeamGeometry was built with. The
// reduced geometry (waist_x = 1) is the default working convention of
// the profile and lens-metric code; SI geometries are used by the
// atomic phase module.

#include <complex>
#include <numbers>
#include <span>
#include <vector>

namespace hglens {

inline constexpr double kPi = std::numbers::pi;

struct ModeIndex {
  int m = 0;  // x index
  int n = 0;  // y index
};

struct Position {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Waist and Rayleigh length of one transverse axis.
struct BeamAxis {
  double waist = 1.0;
  double rayleigh = 1.0;
};

/// Laser wavelength plus the two Rayleigh lengths. Waists follow from
/// w0 = sqrt(lambda * z_R / pi).
class BeamGeometry {
 public:
  BeamGeometry(double wavelength, double rayleigh_x, double rayleigh_y);

  static BeamGeometry from_waists(double wavelength, double waist_x, double waist_y);

  /// Reduced units: waist_x = waist_y = 1 and z_R = rayleigh_in_waists
  /// on both axes, which fixes the wavelength to pi / rayleigh_in_waists.
  static BeamGeometry reduced(double rayleigh_in_waists = 100.0);

  [[nodiscard]] double wavelength() const noexcept { return wavelength_; }
  [[nodiscard]] double wavenumber() const noexcept { return 2.0 * kPi / wavelength_; }
  [[nodiscard]] double rayleigh_x() const noexcept { return rayleigh_x_; }
  [[nodiscard]] double rayleigh_y() const noexcept { return rayleigh_y_; }
  [[nodiscard]] double waist_x() const noexcept { return waist_x_; }
  [[nodiscard]] double waist_y() const noexcept { return waist_y_; }
  [[nodiscard]] BeamAxis x_axis() const noexcept { return {waist_x_, rayleigh_x_}; }
  [[nodiscard]] BeamAxis y_axis() const noexcept { return {waist_y_, rayleigh_y_}; }

  /// Same wavelength, x waist multiplied by `factor` (z_Rx by factor^2).
  [[nodiscard]] BeamGeometry with_scaled_waist_x(double factor) const;

 private:
  double wavelength_;
  double rayleigh_x_;
  double rayleigh_y_;
  double waist_x_;
  double waist_y_;
};

/// Normalized Hermite function phi_m(xi) = H_m(xi) exp(-xi^2/2) / sqrt(2^m m! sqrt(pi)),
/// evaluated with the normalized three-term recurrence (stable well past m = 60).
[[nodiscard]] double hermite_fn(int m, double xi);

/// phi_0 .. phi_{out.size()-1} at xi in one recurrence sweep.
void hermite_fns(double xi, std::span<double> out);

[[nodiscard]] std::vector<double> hermite_fns(int max_m, double xi);

/// d phi_m / d xi = sqrt(m/2) phi_{m-1} - sqrt((m+1)/2) phi_{m+1}.
[[nodiscard]] double hermite_fn_derivative(int m, double xi);

[[nodiscard]] double gouy_phase(double z, double rayleigh);

[[nodiscard]] double beam_radius(double z, const BeamAxis& axis);

/// 1/R(z) = z / (z^2 + z_R^2); zero at the focus.
[[nodiscard]] double wavefront_curvature(double z, double rayleigh);

/// psi_{m,n}(r), normalized so that the cross-sectional integral of |psi|^2 is 1.
[[nodiscard]] std::complex<double> hg_mode(ModeIndex idx, const Position& r,
                                           const BeamGeometry& geom);

/// d psi_{m,n} / dx.
[[nodiscard]] std::complex<double> hg_mode_dx(ModeIndex idx, const Position& r,
                                              const BeamGeometry& geom);

}  // namespace hglens
