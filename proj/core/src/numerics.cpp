#include "hglens/numerics.hpp"

#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "hglens/error.hpp"

namespace hglens {

double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol) {
  if (a == b) return 0.0;
  double error = 0.0;
  // Below ~1e-14 the Kronrod error estimate is pure round-off and bisection
  // would run to the depth limit.
  const double tol = std::max(rel_tol, kMinRelativeTolerance);
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 15, tol, &error);
  if (!std::isfinite(value)) throw NumericError("integrate: non-finite result");
  return value;
}

PowerLawFit fit_power_law(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw ArgumentError("fit_power_law: need two or more matching samples");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw ArgumentError("fit_power_law: samples must be positive");
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(x.size());
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw ArgumentError("fit_power_law: degenerate abscissae");
  const double p = (n * sxy - sx * sy) / denom;
  return {std::exp((sy - p * sx) / n), p};
}

double fit_prefactor(std::span<const double> x, std::span<const double> y, double exponent) {
  if (x.size() != y.size() || x.empty()) throw ArgumentError("fit_prefactor: size mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += std::log(y[i]) - exponent * std::log(x[i]);
  return std::exp(acc / static_cast<double>(x.size()));
}

}  // namespace hglens
