#pragma once

// Odd Hermite-Gaussian mode superpositions whose focal field is linear in x
// up to order 2J+1, and the y-integrated intensity they produce.

#include <complex>
#include <span>
#include <vector>

#include "hglens/modes.hpp"

namespace hglens {

/// Coefficients c_1, c_3, ..., c_{2J+1} of sum_j c_{2j+1} psi_{2j+1,0}.
/// Always stored with unit norm and c_1 > 0.
class ModeSuperposition {
 public:
  /// Normalizes `coefficients` and flips the overall sign so that c_1 > 0.
  explicit ModeSuperposition(std::vector<double> coefficients);

  /// The pure psi_{1,0} lens.
  static ModeSuperposition single_mode();

  [[nodiscard]] int cutoff() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] int max_order() const noexcept { return 2 * cutoff() + 1; }
  [[nodiscard]] std::span<const double> coefficients() const noexcept { return coeffs_; }

  /// Coefficient of odd mode `mode` (1, 3, 5, ...).
  [[nodiscard]] double coefficient(int mode) const;

 private:
  std::vector<double> coeffs_;
};

/// Row k, column j: coefficient of xi^{2k+1} in the Taylor series of phi_{2j+1}(xi).
struct TaylorSystem {
  int cutoff = 0;
  std::vector<double> entries;  // (J+1) x (J+1), row-major

  [[nodiscard]] int size() const noexcept { return cutoff + 1; }
  [[nodiscard]] double at(int k, int j) const { return entries.at(static_cast<std::size_t>(k * size() + j)); }
};

/// Built from exact integer Hermite coefficients and the exact rational
/// series of exp(-xi^2/2); only the final normalization is floating point.
[[nodiscard]] TaylorSystem taylor_matrix(int cutoff);

/// The cancellation superposition for cutoff J: every Taylor coefficient of
/// the focal field from xi^3 through xi^{2J+1} vanishes. Throws NumericError
/// if the elimination meets a zero pivot.
[[nodiscard]] ModeSuperposition solve_coefficients(int cutoff);

/// Taylor coefficients xi^1, xi^3, ..., xi^{2J+1} of sum_j c_{2j+1} phi_{2j+1}(xi).
[[nodiscard]] std::vector<double> taylor_coefficients(const ModeSuperposition& s);

/// f(xi) = sum_j c_{2j+1} phi_{2j+1}(xi).
[[nodiscard]] double focal_profile(const ModeSuperposition& s, double xi);

/// f'(xi).
[[nodiscard]] double focal_profile_derivative(const ModeSuperposition& s, double xi);

/// df/dxi at xi = 0.
[[nodiscard]] double focal_slope(const ModeSuperposition& s);

/// sum_j c_{2j+1} phi_{2j+1}(xi) exp(-2ij * gouy), the superposition with the
/// common Gouy phase of psi_{1,0} factored out.
[[nodiscard]] std::complex<double> dephased_profile(const ModeSuperposition& s, double xi,
                                                    double gouy);

/// Complex field sum_j c_{2j+1} psi_{2j+1,0}(x, 0, z).
[[nodiscard]] std::complex<double> field(const ModeSuperposition& s, double x, double z,
                                         const BeamGeometry& geom);

[[nodiscard]] std::vector<std::complex<double>> field_profile(const ModeSuperposition& s,
                                                              std::span<const double> x, double z,
                                                              const BeamGeometry& geom);

/// y-integrated intensity at unit total power and eps0 omega^2 / 2 = 1.
[[nodiscard]] double integrated_intensity(const ModeSuperposition& s, double x, double z,
                                          const BeamGeometry& geom);

/// d/dx of integrated_intensity.
[[nodiscard]] double integrated_intensity_dx(const ModeSuperposition& s, double x, double z,
                                             const BeamGeometry& geom);

[[nodiscard]] std::vector<double> intensity_profile(const ModeSuperposition& s,
                                                    std::span<const double> x, double z,
                                                    const BeamGeometry& geom);

/// Position x > 0 of the outermost local maximum of the focal integrated intensity.
[[nodiscard]] double outermost_turning_point(const ModeSuperposition& s, const BeamGeometry& geom);

/// Largest focal integrated intensity over all x.
[[nodiscard]] double peak_integrated_intensity(const ModeSuperposition& s,
                                               const BeamGeometry& geom);

/// Default export half-width in waist units: 1.2 * 0.57 * sqrt(2J+1).
[[nodiscard]] double default_half_width(const ModeSuperposition& s);

inline constexpr int kDefaultGridPoints = 2001;

/// Uniform grid on [-half_width, half_width].
[[nodiscard]] std::vector<double> uniform_grid(double half_width, int points);

}  // namespace hglens
