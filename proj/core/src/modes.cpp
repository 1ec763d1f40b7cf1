#include "hglens/modes.hpp"

#include <cmath>
#include <string>

#include "hglens/error.hpp"

namespace hglens {

namespace {

double waist_from(double wavelength, double rayleigh) {
  return std::sqrt(wavelength * rayleigh / kPi);
}

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ArgumentError(std::string(name) + " must be positive and finite, got " +
                        std::to_string(value));
  }
}

// Transverse factor sqrt(sqrt2/w) phi_m(sqrt2 u / w) exp(i k u^2 / (2R)) exp(-i(m+1/2)gouy).
std::complex<double> axis_factor(int m, double u, double z, const BeamAxis& axis, double k) {
  const double w = beam_radius(z, axis);
  const double amp = std::sqrt(std::sqrt(2.0) / w) * hermite_fn(m, std::sqrt(2.0) * u / w);
  const double phase = 0.5 * k * u * u * wavefront_curvature(z, axis.rayleigh) -
                       (m + 0.5) * gouy_phase(z, axis.rayleigh);
  return std::polar(amp, phase);
}

std::complex<double> axis_factor_du(int m, double u, double z, const BeamAxis& axis, double k) {
  const double w = beam_radius(z, axis);
  const double xi = std::sqrt(2.0) * u / w;
  const double pre = std::sqrt(std::sqrt(2.0) / w);
  const double curv = wavefront_curvature(z, axis.rayleigh);
  const double phase = 0.5 * k * u * u * curv - (m + 0.5) * gouy_phase(z, axis.rayleigh);
  const std::complex<double> d_amp = pre * (std::sqrt(2.0) / w) * hermite_fn_derivative(m, xi);
  const std::complex<double> d_phase{0.0, k * u * curv};
  return (d_amp + pre * hermite_fn(m, xi) * d_phase) * std::polar(1.0, phase);
}

}  // namespace

BeamGeometry::BeamGeometry(double wavelength, double rayleigh_x, double rayleigh_y)
    : wavelength_(wavelength), rayleigh_x_(rayleigh_x), rayleigh_y_(rayleigh_y) {
  require_positive(wavelength, "wavelength");
  require_positive(rayleigh_x, "rayleigh_x");
  require_positive(rayleigh_y, "rayleigh_y");
  waist_x_ = waist_from(wavelength, rayleigh_x);
  waist_y_ = waist_from(wavelength, rayleigh_y);
}

BeamGeometry BeamGeometry::from_waists(double wavelength, double waist_x, double waist_y) {
  require_positive(wavelength, "wavelength");
  require_positive(waist_x, "waist_x");
  require_positive(waist_y, "waist_y");
  return {wavelength, kPi * waist_x * waist_x / wavelength, kPi * waist_y * waist_y / wavelength};
}

BeamGeometry BeamGeometry::reduced(double rayleigh_in_waists) {
  require_positive(rayleigh_in_waists, "rayleigh_in_waists");
  BeamGeometry g{kPi / rayleigh_in_waists, rayleigh_in_waists, rayleigh_in_waists};
  // exact unit waists; the sqrt round trip would leave a 1-ulp residue
  g.waist_x_ = 1.0;
  g.waist_y_ = 1.0;
  return g;
}

BeamGeometry BeamGeometry::with_scaled_waist_x(double factor) const {
  require_positive(factor, "waist scale factor");
  BeamGeometry g{wavelength_, rayleigh_x_ * factor * factor, rayleigh_y_};
  g.waist_x_ = waist_x_ * factor;
  g.waist_y_ = waist_y_;
  return g;
}

double hermite_fn(int m, double xi) {
  if (m < 0) throw ArgumentError("hermite_fn: negative mode index " + std::to_string(m));
  const double phi0 = std::exp(-0.5 * xi * xi) / std::sqrt(std::sqrt(kPi));
  if (m == 0) return phi0;
  double prev = phi0;
  double cur = std::sqrt(2.0) * xi * phi0;
  for (int k = 1; k < m; ++k) {
    const double next = xi * std::sqrt(2.0 / (k + 1)) * cur - std::sqrt(double(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

void hermite_fns(double xi, std::span<double> out) {
  if (out.empty()) return;
  out[0] = std::exp(-0.5 * xi * xi) / std::sqrt(std::sqrt(kPi));
  if (out.size() == 1) return;
  out[1] = std::sqrt(2.0) * xi * out[0];
  for (std::size_t k = 1; k + 1 < out.size(); ++k) {
    const double kk = static_cast<double>(k);
    out[k + 1] = xi * std::sqrt(2.0 / (kk + 1)) * out[k] - std::sqrt(kk / (kk + 1)) * out[k - 1];
  }
}

std::vector<double> hermite_fns(int max_m, double xi) {
  if (max_m < 0) throw ArgumentError("hermite_fns: negative mode index " + std::to_string(max_m));
  std::vector<double> out(static_cast<std::size_t>(max_m) + 1);
  hermite_fns(xi, out);
  return out;
}

double hermite_fn_derivative(int m, double xi) {
  if (m < 0) {
    throw ArgumentError("hermite_fn_derivative: negative mode index " + std::to_string(m));
  }
  const auto phi = hermite_fns(m + 1, xi);
  const double lower = m > 0 ? std::sqrt(0.5 * m) * phi[m - 1] : 0.0;
  return lower - std::sqrt(0.5 * (m + 1)) * phi[m + 1];
}

double gouy_phase(double z, double rayleigh) { return std::atan2(z, rayleigh); }

double beam_radius(double z, const BeamAxis& axis) {
  return axis.waist * std::hypot(1.0, z / axis.rayleigh);
}

double wavefront_curvature(double z, double rayleigh) { return z / (z * z + rayleigh * rayleigh); }

std::complex<double> hg_mode(ModeIndex idx, const Position& r, const BeamGeometry& geom) {
  if (idx.m < 0 || idx.n < 0) throw ArgumentError("hg_mode: negative mode index");
  const double k = geom.wavenumber();
  return axis_factor(idx.m, r.x, r.z, geom.x_axis(), k) *
         axis_factor(idx.n, r.y, r.z, geom.y_axis(), k);
}

std::complex<double> hg_mode_dx(ModeIndex idx, const Position& r, const BeamGeometry& geom) {
  if (idx.m < 0 || idx.n < 0) throw ArgumentError("hg_mode_dx: negative mode index");
  const double k = geom.wavenumber();
  return axis_factor_du(idx.m, r.x, r.z, geom.x_axis(), k) *
         axis_factor(idx.n, r.y, r.z, geom.y_axis(), k);
}

}  // namespace hglens
