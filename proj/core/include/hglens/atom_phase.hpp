#pragma once

// From laser intensity to the atomic phase mask: two-level saturation
// intensity, Rabi frequency, far-detuned dipole potential, Raman-Nath phase
// shift, thin-lens focal length and a ballistic ray check. Everything here
// is SI; the beam geometry must be given in metres.

#include <span>
#include <vector>

#include "hglens/modes.hpp"
#include "hglens/superposition.hpp"

namespace hglens {

namespace constants {
// CODATA 2018
inline constexpr double planck = 6.62607015e-34;          // J s
inline constexpr double hbar = planck / (2.0 * kPi);      // J s
inline constexpr double speed_of_light = 299792458.0;     // m / s
inline constexpr double vacuum_permittivity = 8.8541878128e-12;  // F / m
inline constexpr double atomic_mass_unit = 1.66053906660e-27;    // kg
}  // namespace constants

class AtomSpecies {
 public:
  /// mass in kg, linewidth Gamma in rad/s, transition frequency omega in rad/s.
  AtomSpecies(double mass, double linewidth, double transition_frequency);

  static AtomSpecies from_wavelength(double mass, double linewidth, double wavelength);

  /// Sodium D2 line.
  static AtomSpecies sodium_d2();

  [[nodiscard]] double mass() const noexcept { return mass_; }
  [[nodiscard]] double linewidth() const noexcept { return linewidth_; }
  [[nodiscard]] double transition_frequency() const noexcept { return omega_; }
  [[nodiscard]] double wavelength() const noexcept;

 private:
  double mass_;
  double linewidth_;
  double omega_;
};

struct LaserDrive {
  double power;      // W
  double detuning;   // omega_L - omega, rad/s; positive is blue
  BeamGeometry geometry;
  ModeSuperposition superposition;

  void validate() const;
};

class AtomBeam {
 public:
  AtomBeam(double kinetic_energy, double mass);
  static AtomBeam from_velocity(double velocity, double mass);

  [[nodiscard]] double kinetic_energy() const noexcept { return kinetic_energy_; }
  /// kappa_0 = sqrt(2 M K_0) / hbar.
  [[nodiscard]] double wavenumber() const noexcept { return wavenumber_; }

 private:
  double kinetic_energy_;
  double wavenumber_;
};

inline constexpr double kRamanNathThreshold = 100.0;
inline constexpr double kWeakFieldRatio = 0.1;

/// I_S = pi h c Gamma / (3 lambda^3).
[[nodiscard]] double saturation_intensity(const AtomSpecies& a);

/// Omega = Gamma sqrt(I / (2 I_S)).
[[nodiscard]] double rabi_frequency(double intensity, const AtomSpecies& a);

/// U = hbar Gamma^2 / (8 delta) * I / I_S. Throws ArgumentError for zero detuning.
[[nodiscard]] double dipole_potential(double intensity, const AtomSpecies& a, double detuning);

/// Off-resonant saturation parameter (I / I_S) / (1 + 4 delta^2 / Gamma^2),
/// the expansion parameter of the first-order dipole potential.
[[nodiscard]] double saturation_parameter(double intensity, const AtomSpecies& a, double detuning);

/// True when saturation_parameter is at most `max_ratio`.
[[nodiscard]] bool weak_field(double intensity, const AtomSpecies& a, double detuning,
                              double max_ratio = kWeakFieldRatio);

/// Peak local intensity of the drive, W/m^2.
[[nodiscard]] double peak_intensity(const LaserDrive& drive);

/// K_0 / max |U|.
[[nodiscard]] double raman_nath_ratio(const LaserDrive& drive, const AtomBeam& beam,
                                      const AtomSpecies& a);

/// Signed C with delta_phi = -C * I_bar, I_bar in W/m:
/// C = sqrt(2M) Gamma^2 / (16 sqrt(K_0) I_S delta).
[[nodiscard]] double phase_prefactor(const LaserDrive& drive, const AtomBeam& beam,
                                     const AtomSpecies& a);

struct PhaseMask {
  double z = 0.0;
  std::vector<double> x;                     // m
  std::vector<double> integrated_intensity;  // W/m
  std::vector<double> phase;                 // rad
  double raman_nath_ratio = 0.0;
};

/// Linearized phase shift on the grid `x` at axial position z. Throws
/// PhysicsValidityError when K_0 / max U is below `raman_nath_threshold`.
[[nodiscard]] PhaseMask phase_mask(const LaserDrive& drive, const AtomBeam& beam,
                                   const AtomSpecies& a, std::span<const double> x, double z,
                                   double raman_nath_threshold = kRamanNathThreshold);

/// kappa_0 * integral dy (sqrt(1 - U/K_0) - 1), without linearizing the root.
[[nodiscard]] double phase_shift_exact(const LaserDrive& drive, const AtomBeam& beam,
                                       const AtomSpecies& a, double x, double z);

struct FocalLength {
  double closed_form = 0.0;  // kappa_0 / (2 C A_SI)
  double fitted = 0.0;       // from a quadratic-plus-quartic fit over |x| <= d/2
  bool focusing = true;      // false for a diverging (red-detuned) lens
};

[[nodiscard]] FocalLength focal_length(const LaserDrive& drive, const AtomBeam& beam,
                                       const AtomSpecies& a);

struct Ray {
  double launch = 0.0;    // m
  double angle = 0.0;     // rad, (1/kappa_0) d(delta_phi)/dx
  double crossing = 0.0;  // distance at which the ray reaches x = 0 (inf if undeflected)
};

struct RayCheck {
  double focal_length = 0.0;
  double half_width = 0.0;
  double best_focus = 0.0;          // plane of minimum RMS spread
  double rms_at_focal_plane = 0.0;
  double rms_at_best_focus = 0.0;
  std::vector<Ray> rays;
};

/// Parallel rays uniformly over |x| <= half_width (default: the deviation
/// mark), kicked by the phase-mask gradient at z = 0 and propagated
/// ballistically.
[[nodiscard]] RayCheck ray_check(const LaserDrive& drive, const AtomBeam& beam,
                                 const AtomSpecies& a, int n_rays, double half_width = 0.0);

}  // namespace hglens
