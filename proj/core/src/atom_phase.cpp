#include "hglens/atom_phase.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hglens/error.hpp"
#include "hglens/lens_metrics.hpp"
#include "hglens/numerics.hpp"

namespace hglens {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ArgumentError(std::string(what) + " must be positive and finite");
  }
}

// |psi_0,y(y)|^2 integrates to 1 over y; its peak is sqrt2 / (w_y sqrt(pi)).
double y_density(double y, double w_y) {
  const double eta = std::sqrt(2.0) * y / w_y;
  return std::sqrt(2.0) / w_y * std::exp(-eta * eta) / std::sqrt(kPi);
}

}  // namespace

AtomSpecies::AtomSpecies(double mass, double linewidth, double transition_frequency)
    : mass_(mass), linewidth_(linewidth), omega_(transition_frequency) {
  require_positive(mass, "atomic mass");
  require_positive(linewidth, "linewidth");
  require_positive(transition_frequency, "transition frequency");
}

AtomSpecies AtomSpecies::from_wavelength(double mass, double linewidth, double wavelength) {
  require_positive(wavelength, "transition wavelength");
  return {mass, linewidth, 2.0 * kPi * constants::speed_of_light / wavelength};
}

AtomSpecies AtomSpecies::sodium_d2() {
  return from_wavelength(22.98976928 * constants::atomic_mass_unit, 2.0 * kPi * 9.795e6,
                         589.158e-9);
}

double AtomSpecies::wavelength() const noexcept {
  return 2.0 * kPi * constants::speed_of_light / omega_;
}

void LaserDrive::validate() const {
  require_positive(power, "laser power");
  if (detuning == 0.0 || !std::isfinite(detuning)) {
    throw ArgumentError("laser detuning must be nonzero and finite");
  }
}

AtomBeam::AtomBeam(double kinetic_energy, double mass)
    : kinetic_energy_(kinetic_energy),
      wavenumber_(std::sqrt(2.0 * mass * kinetic_energy) / constants::hbar) {
  require_positive(kinetic_energy, "kinetic energy");
  require_positive(mass, "atomic mass");
}

AtomBeam AtomBeam::from_velocity(double velocity, double mass) {
  require_positive(velocity, "atom velocity");
  return {0.5 * mass * velocity * velocity, mass};
}

double saturation_intensity(const AtomSpecies& a) {
  const double lambda = a.wavelength();
  return kPi * constants::planck * constants::speed_of_light * a.linewidth() /
         (3.0 * lambda * lambda * lambda);
}

double rabi_frequency(double intensity, const AtomSpecies& a) {
  if (intensity < 0.0) throw ArgumentError("rabi_frequency: negative intensity");
  return a.linewidth() * std::sqrt(intensity / (2.0 * saturation_intensity(a)));
}

double dipole_potential(double intensity, const AtomSpecies& a, double detuning) {
  if (detuning == 0.0) throw ArgumentError("dipole_potential: zero detuning");
  const double g = a.linewidth();
  return constants::hbar * g * g / (8.0 * detuning) * intensity / saturation_intensity(a);
}

double saturation_parameter(double intensity, const AtomSpecies& a, double detuning) {
  const double r = 2.0 * detuning / a.linewidth();
  return std::abs(intensity) / saturation_intensity(a) / (1.0 + r * r);
}

bool weak_field(double intensity, const AtomSpecies& a, double detuning, double max_ratio) {
  return saturation_parameter(intensity, a, detuning) <= max_ratio;
}

double peak_intensity(const LaserDrive& drive) {
  drive.validate();
  const auto& g = drive.geometry;
  return drive.power * peak_integrated_intensity(drive.superposition, g) *
         y_density(0.0, g.waist_y());
}

double raman_nath_ratio(const LaserDrive& drive, const AtomBeam& beam, const AtomSpecies& a) {
  const double u = std::abs(dipole_potential(peak_intensity(drive), a, drive.detuning));
  return beam.kinetic_energy() / u;
}

double phase_prefactor(const LaserDrive& drive, const AtomBeam& beam, const AtomSpecies& a) {
  drive.validate();
  const double g = a.linewidth();
  return std::sqrt(2.0 * a.mass()) * g * g /
         (16.0 * std::sqrt(beam.kinetic_energy()) * saturation_intensity(a) * drive.detuning);
}

PhaseMask phase_mask(const LaserDrive& drive, const AtomBeam& beam, const AtomSpecies& a,
                     std::span<const double> x, double z, double raman_nath_threshold) {
  PhaseMask mask;
  mask.z = z;
  mask.raman_nath_ratio = raman_nath_ratio(drive, beam, a);
  if (mask.raman_nath_ratio < raman_nath_threshold) {
    throw PhysicsValidityError("Raman-Nath regime violated: K0 / max U = " +
                                   std::to_string(mask.raman_nath_ratio) + " < " +
                                   std::to_string(raman_nath_threshold),
                               mask.raman_nath_ratio);
  }
  const double c = phase_prefactor(drive, beam, a);
  mask.x.assign(x.begin(), x.end());
  mask.integrated_intensity.reserve(x.size());
  mask.phase.reserve(x.size());
  for (double xi : x) {
    const double ibar =
        drive.power * integrated_intensity(drive.superposition, xi, z, drive.geometry);
    mask.integrated_intensity.push_back(ibar);
    mask.phase.push_back(-c * ibar);
  }
  return mask;
}

double phase_shift_exact(const LaserDrive& drive, const AtomBeam& beam, const AtomSpecies& a,
                         double x, double z) {
  drive.validate();
  const auto& g = drive.geometry;
  const double ibar = drive.power * integrated_intensity(drive.superposition, x, z, g);
  const double w_y = beam_radius(z, g.y_axis());
  const double k0 = beam.kinetic_energy();
  auto integrand = [&](double y) {
    const double u = dipole_potential(ibar * y_density(y, w_y), a, drive.detuning) / k0;
    if (u >= 1.0) {
      throw PhysicsValidityError("phase_shift_exact: potential exceeds the kinetic energy", 1.0 / u);
    }
    // sqrt(1-u) - 1 without cancellation
    return -u / (std::sqrt(1.0 - u) + 1.0);
  };
  const double reach = 9.0 * w_y;  // exp(-162) is far below double resolution
  return beam.wavenumber() * integrate(integrand, -reach, reach, 1e-13);
}

FocalLength focal_length(const LaserDrive& drive, const AtomBeam& beam, const AtomSpecies& a) {
  drive.validate();
  const auto& s = drive.superposition;
  const auto& g = drive.geometry;
  const double c = phase_prefactor(drive, beam, a);
  const double kappa = beam.wavenumber();

  FocalLength f;
  f.closed_form = kappa / (2.0 * c * drive.power * focal_curvature(s, g));

  // Least squares phi = p x^2 + q x^4 on |x| <= d/2; the quartic term soaks up
  // the residual aberration so p is the paraxial curvature.
  const double half = 0.5 * deviation_mark(s, g);
  constexpr int n = 201;
  double s44 = 0, s46 = 0, s88 = 0, s2p = 0, s4p = 0;
  for (int i = 0; i < n; ++i) {
    const double x = -half + 2.0 * half * i / (n - 1);
    const double phi = -c * drive.power * integrated_intensity(s, x, 0.0, g);
    const double x2 = x * x;
    const double x4 = x2 * x2;
    s44 += x4;
    s46 += x4 * x2;
    s88 += x4 * x4;
    s2p += x2 * phi;
    s4p += x4 * phi;
  }
  const double det = s44 * s88 - s46 * s46;
  const double p = (s2p * s88 - s4p * s46) / det;
  f.fitted = -kappa / (2.0 * p);
  f.focusing = f.closed_form > 0.0;
  return f;
}

RayCheck ray_check(const LaserDrive& drive, const AtomBeam& beam, const AtomSpecies& a,
                   int n_rays, double half_width) {
  drive.validate();
  if (n_rays < 1) throw ArgumentError("ray_check: need at least one ray");
  const auto& s = drive.superposition;
  const auto& g = drive.geometry;

  RayCheck rc;
  rc.focal_length = focal_length(drive, beam, a).closed_form;
  rc.half_width = half_width > 0.0 ? half_width : deviation_mark(s, g);
  const double c = phase_prefactor(drive, beam, a);
  const double kappa = beam.wavenumber();

  double sxt = 0.0;
  double stt = 0.0;
  rc.rays.reserve(static_cast<std::size_t>(n_rays));
  for (int i = 0; i < n_rays; ++i) {
    Ray r;
    r.launch = -rc.half_width + (i + 0.5) * 2.0 * rc.half_width / n_rays;
    r.angle = -c * drive.power * integrated_intensity_dx(s, r.launch, 0.0, g) / kappa;
    r.crossing = r.angle != 0.0 ? -r.launch / r.angle : std::numeric_limits<double>::infinity();
    sxt += r.launch * r.angle;
    stt += r.angle * r.angle;
    rc.rays.push_back(r);
  }

  auto rms_at = [&](double distance) {
    double acc = 0.0;
    for (const auto& r : rc.rays) {
      const double pos = r.launch + r.angle * distance;
      acc += pos * pos;
    }
    return std::sqrt(acc / static_cast<double>(rc.rays.size()));
  };
  rc.best_focus = stt > 0.0 ? -sxt / stt : std::numeric_limits<double>::infinity();
  rc.rms_at_focal_plane = rms_at(rc.focal_length);
  rc.rms_at_best_focus = stt > 0.0 ? rms_at(rc.best_focus) : rms_at(0.0);
  return rc;
}

}  // namespace hglens
