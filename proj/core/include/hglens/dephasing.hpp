#pragma once

// Spherical lens from two identical superposition beams crossed at right
// angles (one along z modulated in x, one along x modulated in z), added
// incoherently. Gouy dephasing away from the common focus bounds how
// tightly the beams may be focused.

#include <vector>

#include "hglens/lens_metrics.hpp"
#include "hglens/modes.hpp"
#include "hglens/superposition.hpp"

namespace hglens {

enum class DephasingModel {
  /// Full paraxial propagation: beam widening w(z) and relative Gouy phases.
  full,
  /// Relative Gouy phases only, transverse scale frozen at the waist.
  gouy_phase_only,
};

struct CrossedLensConfig {
  ModeSuperposition superposition = ModeSuperposition::single_mode();
  BeamGeometry geometry = BeamGeometry::reduced();
  DephasingModel model = DephasingModel::full;
};

/// Integrated intensity of one beam under the chosen propagation model;
/// `transverse` is the modulated coordinate, `along` the propagation one.
[[nodiscard]] double beam_intensity(const CrossedLensConfig& cfg, double transverse, double along);

/// I(x, z) + I(z, x).
[[nodiscard]] double crossed_intensity(const CrossedLensConfig& cfg, double x, double z);

/// Dephasing-free reference I(x, 0) + I(z, 0).
[[nodiscard]] double focal_reference(const CrossedLensConfig& cfg, double x, double z);

/// (crossed - reference) / reference. Throws ArgumentError at the origin.
[[nodiscard]] double relative_deviation(const CrossedLensConfig& cfg, double x, double z);

/// max |relative_deviation| over `angles` equally spaced points of the circle
/// x^2 + z^2 = radius^2.
[[nodiscard]] double max_perimeter_deviation(const CrossedLensConfig& cfg, double radius,
                                             int angles = 720);

struct ZminOptions {
  double tolerance = kDeviationTolerance;
  int angles = 720;
  DephasingModel model = DephasingModel::full;
  double max_rayleigh_in_waists = 1e6;  // scan ceiling; no z_min below it is a bracket failure
};

struct ScanSample {
  double rayleigh_in_waists;
  double max_deviation;
};

struct DephasingScan {
  int order = 1;
  double rayleigh_in_waists = 0.0;    // z_min / w0x
  double zmin_in_wavelengths = 0.0;   // z_min / lambda_L = (z_min / w0x)^2 / pi
  double waist_in_wavelengths = 0.0;  // w0x / lambda_L at z_min
  double radius_in_waists = 0.0;      // d_{2J+1} / w0x, the probed circle
  double max_relative_deviation = 0.0;
  double opening_angle_deg = 0.0;     // far-field half angle atan(w0x / z_min)
  std::vector<ScanSample> trace;      // outward scan used to bracket z_min
};

/// Smallest z_Rx for which the perimeter deviation on the circle of radius
/// d_{2J+1} stays within tolerance. Throws NumericError, with the scan
/// trace in the message, when the criterion is not monotone over the bracket.
[[nodiscard]] DephasingScan find_zmin(int cutoff, const ZminOptions& options = {});

/// find_zmin for each cutoff, in parallel.
[[nodiscard]] std::vector<DephasingScan> scan_zmin(const std::vector<int>& cutoffs,
                                                   const ZminOptions& options = {});

}  // namespace hglens
