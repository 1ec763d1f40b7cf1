#include "hglens/dephasing.hpp"

#include <cmath>
#include <sstream>

#include "hglens/error.hpp"
#include "hglens/numerics.hpp"

namespace hglens {

namespace {

constexpr double kScanStart = 0.25;
constexpr double kScanFactor = 1.189207115002721;  // 2^(1/4)

std::string format_trace(const std::vector<ScanSample>& trace) {
  std::ostringstream os;
  os << "scan trace (z_R/w0 : max deviation):";
  for (const auto& s : trace) os << ' ' << s.rayleigh_in_waists << ':' << s.max_deviation;
  return os.str();
}

}  // namespace

double beam_intensity(const CrossedLensConfig& cfg, double transverse, double along) {
  if (cfg.model == DephasingModel::full) {
    return integrated_intensity(cfg.superposition, transverse, along, cfg.geometry);
  }
  const auto ax = cfg.geometry.x_axis();
  const auto f = dephased_profile(cfg.superposition, std::sqrt(2.0) * transverse / ax.waist,
                                  gouy_phase(along, ax.rayleigh));
  return std::sqrt(2.0) / ax.waist * std::norm(f);
}

double crossed_intensity(const CrossedLensConfig& cfg, double x, double z) {
  return beam_intensity(cfg, x, z) + beam_intensity(cfg, z, x);
}

double focal_reference(const CrossedLensConfig& cfg, double x, double z) {
  return beam_intensity(cfg, x, 0.0) + beam_intensity(cfg, z, 0.0);
}

double relative_deviation(const CrossedLensConfig& cfg, double x, double z) {
  if (x == 0.0 && z == 0.0) {
    throw ArgumentError("relative_deviation: undefined at the common focus (0, 0)");
  }
  const double ref = focal_reference(cfg, x, z);
  return (crossed_intensity(cfg, x, z) - ref) / ref;
}

double max_perimeter_deviation(const CrossedLensConfig& cfg, double radius, int angles) {
  if (!(radius > 0.0)) throw ArgumentError("max_perimeter_deviation: radius must be positive");
  if (angles < 4) throw ArgumentError("max_perimeter_deviation: need at least 4 angles");
  double worst = 0.0;
  for (int i = 0; i < angles; ++i) {
    const double t = 2.0 * kPi * i / angles;
    worst = std::max(worst, std::abs(relative_deviation(cfg, radius * std::cos(t),
                                                        radius * std::sin(t))));
  }
  return worst;
}

DephasingScan find_zmin(int cutoff, const ZminOptions& options) {
  if (cutoff < 0) throw ArgumentError("find_zmin: negative cutoff");
  if (options.angles < 720) throw ArgumentError("find_zmin: at least 720 angles are required");
  if (!(options.tolerance > 0.0 && options.tolerance < 0.1)) {
    throw ArgumentError("find_zmin: tolerance must lie in (0, 0.1)");
  }
  if (!(options.max_rayleigh_in_waists > kScanStart)) {
    throw ArgumentError("find_zmin: scan ceiling must exceed " + std::to_string(kScanStart));
  }

  CrossedLensConfig cfg{solve_coefficients(cutoff), BeamGeometry::reduced(), options.model};
  const double radius = deviation_mark(cfg.superposition, cfg.geometry, options.tolerance);
  auto criterion = [&](double zeta) {
    cfg.geometry = BeamGeometry::reduced(zeta);
    return max_perimeter_deviation(cfg, radius, options.angles);
  };

  DephasingScan scan;
  scan.order = cfg.superposition.max_order();
  scan.radius_in_waists = radius;

  double zeta = kScanStart;
  double value = criterion(zeta);
  scan.trace.push_back({zeta, value});
  while (value > options.tolerance) {
    zeta *= kScanFactor;
    if (zeta > options.max_rayleigh_in_waists) {
      throw NumericError("find_zmin: no admissible Rayleigh length below " +
                         std::to_string(options.max_rayleigh_in_waists) + " waists for order " +
                         std::to_string(scan.order) + "; " + format_trace(scan.trace));
    }
    value = criterion(zeta);
    scan.trace.push_back({zeta, value});
  }

  // Three more steps past the crossing so the monotonicity check covers both sides.
  const std::size_t crossing = scan.trace.size() - 1;
  double probe = zeta;
  for (int i = 0; i < 3; ++i) {
    probe *= kScanFactor * kScanFactor;
    scan.trace.push_back({probe, criterion(probe)});
  }
  // The criterion must decrease once within an order of magnitude of tol.
  std::size_t first = crossing;
  while (first > 0 && scan.trace[first - 1].max_deviation <= 10.0 * options.tolerance) --first;
  for (std::size_t i = first + 1; i < scan.trace.size(); ++i) {
    if (scan.trace[i].max_deviation > scan.trace[i - 1].max_deviation) {
      throw NumericError("find_zmin: criterion not monotone in z_R for order " +
                         std::to_string(scan.order) + "; " + format_trace(scan.trace));
    }
  }

  double hi = zeta;
  double lo = crossing > 0 ? scan.trace[crossing - 1].rayleigh_in_waists : 0.0;
  if (lo == 0.0) {
    // Already admissible at the scan start; this only happens for loose tolerances.
    hi = kScanStart;
    lo = kScanStart;
  }
  for (int it = 0; it < 200 && hi - lo > 1e-10 * hi; ++it) {
    const double mid = std::sqrt(lo * hi);
    (criterion(mid) > options.tolerance ? lo : hi) = mid;
  }

  scan.rayleigh_in_waists = hi;
  scan.zmin_in_wavelengths = hi * hi / kPi;
  scan.waist_in_wavelengths = hi / kPi;
  scan.max_relative_deviation = criterion(hi);
  scan.opening_angle_deg = std::atan(1.0 / hi) * 180.0 / kPi;
  return scan;
}

std::vector<DephasingScan> scan_zmin(const std::vector<int>& cutoffs, const ZminOptions& options) {
  return parallel_map(cutoffs, [&options](int j) { return find_zmin(j, options); });
}

}  // namespace hglens
