#include "hglens/superposition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "hglens/error.hpp"

namespace hglens {

namespace mp = boost::multiprecision;

namespace {

using BigInt = mp::cpp_int;
using Rational = mp::cpp_rational;

// Integer coefficients of H_0 .. H_max, lowest power first.
std::vector<std::vector<BigInt>> hermite_polynomials(int max_m) {
  std::vector<std::vector<BigInt>> h;
  h.push_back({1});
  if (max_m >= 1) h.push_back({0, 2});
  for (int n = 1; n < max_m; ++n) {
    std::vector<BigInt> next(static_cast<std::size_t>(n) + 2, 0);
    for (std::size_t i = 0; i < h[n].size(); ++i) next[i + 1] += 2 * h[n][i];
    for (std::size_t i = 0; i < h[n - 1].size(); ++i) next[i] -= 2 * n * h[n - 1][i];
    h.push_back(std::move(next));
  }
  return h;
}

// Exact Taylor coefficients of H_m(xi) exp(-xi^2/2) for odd powers 1..2J+1,
// without the 1/sqrt(2^m m! sqrt(pi)) normalization. Row k, column j.
std::vector<std::vector<Rational>> unnormalized_taylor(int cutoff) {
  const int size = cutoff + 1;
  const int max_power = 2 * cutoff + 1;
  const auto herm = hermite_polynomials(max_power);

  // (-1/2)^r / r!
  std::vector<Rational> gauss(static_cast<std::size_t>(cutoff) + 1);
  BigInt fact = 1;
  for (int r = 0; r <= cutoff; ++r) {
    if (r > 0) fact *= r;
    const BigInt den = fact * (BigInt(1) << r);
    gauss[r] = Rational(r % 2 == 0 ? 1 : -1, 1) / Rational(den);
  }

  std::vector<std::vector<Rational>> rows(size, std::vector<Rational>(size));
  for (int k = 0; k < size; ++k) {
    const int power = 2 * k + 1;
    for (int j = 0; j < size; ++j) {
      const auto& h = herm[2 * j + 1];
      Rational sum = 0;
      for (int q = 1; q <= power && q < static_cast<int>(h.size()); q += 2) {
        if (h[q] == 0) continue;
        sum += Rational(h[q]) * gauss[(power - q) / 2];
      }
      rows[k][j] = sum;
    }
  }
  return rows;
}

// 2^m m! as an exact integer.
BigInt hermite_norm_squared_integer(int m) {
  BigInt v = 1;
  for (int i = 2; i <= m; ++i) v *= i;
  return v << m;
}

double hermite_norm(int m) {
  return std::sqrt(hermite_norm_squared_integer(m).convert_to<double>() * std::sqrt(kPi));
}

// Fills out[j] = phi_{2j+1}(xi) for j = 0..J.
void odd_hermite_fns(double xi, int cutoff, std::vector<double>& all) {
  all.resize(static_cast<std::size_t>(2 * cutoff + 2));
  hermite_fns(xi, all);
}

}  // namespace

ModeSuperposition::ModeSuperposition(std::vector<double> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw ArgumentError("ModeSuperposition: no coefficients");
  for (double c : coeffs_) {
    if (!std::isfinite(c)) throw ArgumentError("ModeSuperposition: non-finite coefficient");
  }
  if (coeffs_.front() == 0.0) throw ArgumentError("ModeSuperposition: c_1 must be nonzero");
  const double norm = std::sqrt(std::inner_product(coeffs_.begin(), coeffs_.end(), coeffs_.begin(), 0.0));
  const double scale = (coeffs_.front() > 0.0 ? 1.0 : -1.0) / norm;
  for (double& c : coeffs_) c *= scale;
}

ModeSuperposition ModeSuperposition::single_mode() { return ModeSuperposition({1.0}); }

double ModeSuperposition::coefficient(int mode) const {
  if (mode < 1 || mode % 2 == 0 || mode > max_order()) {
    throw ArgumentError("coefficient: mode " + std::to_string(mode) +
                        " is not an odd mode of this superposition");
  }
  return coeffs_[static_cast<std::size_t>(mode / 2)];
}

TaylorSystem taylor_matrix(int cutoff) {
  if (cutoff < 0) throw ArgumentError("taylor_matrix: negative cutoff");
  const auto exact = unnormalized_taylor(cutoff);
  TaylorSystem t;
  t.cutoff = cutoff;
  const int size = cutoff + 1;
  t.entries.resize(static_cast<std::size_t>(size * size));
  for (int j = 0; j < size; ++j) {
    const double norm = hermite_norm(2 * j + 1);
    for (int k = 0; k < size; ++k) {
      t.entries[static_cast<std::size_t>(k * size + j)] = exact[k][j].convert_to<double>() / norm;
    }
  }
  return t;
}

ModeSuperposition solve_coefficients(int cutoff) {
  if (cutoff < 0) throw ArgumentError("solve_coefficients: negative cutoff");
  if (cutoff == 0) return ModeSuperposition::single_mode();

  // Unknowns u_j = c_j / norm_j with u_0 = 1; rows 1..J must vanish.
  auto rows = unnormalized_taylor(cutoff);
  const int n = cutoff;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) a[r][c] = rows[r + 1][c + 1];
    a[r][n] = -rows[r + 1][0];
  }

  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) {
      throw NumericError("solve_coefficients: singular Taylor system for J = " +
                         std::to_string(cutoff));
    }
    std::swap(a[col], a[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (int c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }

  // c_j / c_1 = u_j * sqrt(2^m m! / 2); the sqrt(sqrt(pi)) factor is common.
  std::vector<double> c(static_cast<std::size_t>(cutoff) + 1);
  c[0] = 1.0;
  for (int j = 1; j <= cutoff; ++j) {
    const Rational u = a[j - 1][n] / a[j - 1][j - 1];
    const double scale =
        std::sqrt((hermite_norm_squared_integer(2 * j + 1) / 2).convert_to<double>());
    c[j] = u.convert_to<double>() * scale;
  }
  return ModeSuperposition(std::move(c));
}

std::vector<double> taylor_coefficients(const ModeSuperposition& s) {
  const auto t = taylor_matrix(s.cutoff());
  std::vector<double> out(static_cast<std::size_t>(t.size()), 0.0);
  const auto c = s.coefficients();
  for (int k = 0; k < t.size(); ++k) {
    for (int j = 0; j < t.size(); ++j) out[k] += t.at(k, j) * c[j];
  }
  return out;
}

double focal_profile(const ModeSuperposition& s, double xi) {
  std::vector<double> phi;
  odd_hermite_fns(xi, s.cutoff(), phi);
  const auto c = s.coefficients();
  double sum = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) sum += c[j] * phi[2 * j + 1];
  return sum;
}

double focal_profile_derivative(const ModeSuperposition& s, double xi) {
  std::vector<double> phi(static_cast<std::size_t>(s.max_order()) + 2);
  hermite_fns(xi, phi);
  const auto c = s.coefficients();
  double sum = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const std::size_t m = 2 * j + 1;
    sum += c[j] * (std::sqrt(0.5 * m) * phi[m - 1] - std::sqrt(0.5 * (m + 1)) * phi[m + 1]);
  }
  return sum;
}

double focal_slope(const ModeSuperposition& s) { return focal_profile_derivative(s, 0.0); }

std::complex<double> dephased_profile(const ModeSuperposition& s, double xi, double gouy) {
  std::vector<double> phi;
  odd_hermite_fns(xi, s.cutoff(), phi);
  const auto c = s.coefficients();
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t j = 0; j < c.size(); ++j) {
    sum += c[j] * phi[2 * j + 1] * std::polar(1.0, -2.0 * static_cast<double>(j) * gouy);
  }
  return sum;
}

std::complex<double> field(const ModeSuperposition& s, double x, double z,
                           const BeamGeometry& geom) {
  const auto ax = geom.x_axis();
  const auto ay = geom.y_axis();
  const double wx = beam_radius(z, ax);
  const double wy = beam_radius(z, ay);
  const double gx = gouy_phase(z, ax.rayleigh);
  const double gy = gouy_phase(z, ay.rayleigh);
  const double amp =
      std::sqrt(std::sqrt(2.0) / wx) * std::sqrt(std::sqrt(2.0) / wy) * hermite_fn(0, 0.0);
  const double phase =
      0.5 * geom.wavenumber() * x * x * wavefront_curvature(z, ax.rayleigh) - 1.5 * gx - 0.5 * gy;
  return std::polar(amp, phase) * dephased_profile(s, std::sqrt(2.0) * x / wx, gx);
}

std::vector<std::complex<double>> field_profile(const ModeSuperposition& s,
                                                std::span<const double> x, double z,
                                                const BeamGeometry& geom) {
  std::vector<std::complex<double>> out;
  out.reserve(x.size());
  for (double xi : x) out.push_back(field(s, xi, z, geom));
  return out;
}

double integrated_intensity(const ModeSuperposition& s, double x, double z,
                            const BeamGeometry& geom) {
  const auto ax = geom.x_axis();
  const double w = beam_radius(z, ax);
  const auto f = dephased_profile(s, std::sqrt(2.0) * x / w, gouy_phase(z, ax.rayleigh));
  return std::sqrt(2.0) / w * std::norm(f);
}

double integrated_intensity_dx(const ModeSuperposition& s, double x, double z,
                               const BeamGeometry& geom) {
  const auto ax = geom.x_axis();
  const double w = beam_radius(z, ax);
  const double xi = std::sqrt(2.0) * x / w;
  const double gouy = gouy_phase(z, ax.rayleigh);

  std::vector<double> phi(static_cast<std::size_t>(s.max_order()) + 2);
  hermite_fns(xi, phi);
  const auto c = s.coefficients();
  std::complex<double> f{0.0, 0.0};
  std::complex<double> df{0.0, 0.0};
  for (std::size_t j = 0; j < c.size(); ++j) {
    const std::size_t m = 2 * j + 1;
    const auto rot = std::polar(1.0, -2.0 * static_cast<double>(j) * gouy);
    f += c[j] * phi[m] * rot;
    df += c[j] * (std::sqrt(0.5 * m) * phi[m - 1] - std::sqrt(0.5 * (m + 1)) * phi[m + 1]) * rot;
  }
  return std::sqrt(2.0) / w * 2.0 * std::real(std::conj(f) * df) * (std::sqrt(2.0) / w);
}

std::vector<double> intensity_profile(const ModeSuperposition& s, std::span<const double> x,
                                      double z, const BeamGeometry& geom) {
  std::vector<double> out;
  out.reserve(x.size());
  for (double xi : x) out.push_back(integrated_intensity(s, xi, z, geom));
  return out;
}

namespace {

// Local maxima of f(xi)^2 on (0, xi_max], located where f f' changes sign
// from positive to negative and refined by bisection.
std::vector<double> focal_maxima(const ModeSuperposition& s) {
  const double xi_max = std::sqrt(2.0 * s.max_order() + 1.0) + 6.0;
  constexpr double step = 1e-2;
  auto slope = [&](double xi) { return focal_profile(s, xi) * focal_profile_derivative(s, xi); };

  std::vector<double> maxima;
  double lo = step;
  double g_lo = slope(lo);
  for (double hi = lo + step; hi <= xi_max; hi += step) {
    const double g_hi = slope(hi);
    if (g_lo > 0.0 && g_hi <= 0.0) {
      double a = lo;
      double b = hi;
      for (int it = 0; it < 200 && b - a > 1e-14 * b; ++it) {
        const double mid = 0.5 * (a + b);
        (slope(mid) > 0.0 ? a : b) = mid;
      }
      maxima.push_back(0.5 * (a + b));
    }
    lo = hi;
    g_lo = g_hi;
  }
  return maxima;
}

}  // namespace

double outermost_turning_point(const ModeSuperposition& s, const BeamGeometry& geom) {
  const auto maxima = focal_maxima(s);
  if (maxima.empty()) throw NumericError("outermost_turning_point: no maximum found");
  return maxima.back() * geom.waist_x() / std::sqrt(2.0);
}

double peak_integrated_intensity(const ModeSuperposition& s, const BeamGeometry& geom) {
  double best = 0.0;
  for (double xi : focal_maxima(s)) best = std::max(best, std::pow(focal_profile(s, xi), 2));
  return std::sqrt(2.0) / geom.waist_x() * best;
}

double default_half_width(const ModeSuperposition& s) {
  return 1.2 * 0.57 * std::sqrt(static_cast<double>(s.max_order()));
}

std::vector<double> uniform_grid(double half_width, int points) {
  if (!(half_width > 0.0)) throw ArgumentError("uniform_grid: half-width must be positive");
  if (points < 2) throw ArgumentError("uniform_grid: need at least two points");
  std::vector<double> x(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    x[static_cast<std::size_t>(i)] = -half_width + 2.0 * half_width * i / (points - 1);
  }
  return x;
}

}  // namespace hglens
