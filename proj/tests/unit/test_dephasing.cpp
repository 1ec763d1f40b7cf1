#include <cmath>

#include "doctest.h"
#include "hglens/dephasing.hpp"
#include "hglens/error.hpp"

using namespace hglens;

namespace {

CrossedLensConfig config(int j, double zeta, DephasingModel model = DephasingModel::full) {
  return {solve_coefficients(j), BeamGeometry::reduced(zeta), model};
}

}  // namespace

TEST_CASE("crossed lens is symmetric under x <-> z and reflections") {
  for (auto model : {DephasingModel::full, DephasingModel::gouy_phase_only}) {
    const auto cfg = config(3, 5.0, model);
    for (auto [x, z] : {std::pair{0.3, 0.9}, {1.2, -0.4}, {0.05, 2.0}}) {
      const double v = relative_deviation(cfg, x, z);
      CHECK(v == doctest::Approx(relative_deviation(cfg, z, x)).epsilon(1e-13));
      CHECK(v == doctest::Approx(relative_deviation(cfg, -x, z)).epsilon(1e-13));
      CHECK(v == doctest::Approx(relative_deviation(cfg, x, -z)).epsilon(1e-13));
    }
  }
}

TEST_CASE("no deviation on the axes") {
  const auto cfg = config(2, 3.0);
  for (double x : {0.1, 0.7, 1.5}) {
    CHECK(relative_deviation(cfg, x, 0.0) == doctest::Approx(0.0).scale(1e-15));
    CHECK(relative_deviation(cfg, 0.0, x) == doctest::Approx(0.0).scale(1e-15));
  }
  CHECK_THROWS_AS((void)relative_deviation(cfg, 0.0, 0.0), ArgumentError);
}

TEST_CASE("gouy-only model keeps the focal width") {
  const auto full = config(0, 4.0);
  const auto gouy = config(0, 4.0, DephasingModel::gouy_phase_only);
  // Psi_1 alone has no relative phase, so the frozen model sees no change at all.
  CHECK(beam_intensity(gouy, 0.6, 3.0) == doctest::Approx(beam_intensity(gouy, 0.6, 0.0)).epsilon(1e-14));
  CHECK(beam_intensity(full, 0.6, 3.0) < beam_intensity(full, 0.6, 0.0));
  CHECK(beam_intensity(full, 0.6, 0.0) == doctest::Approx(beam_intensity(gouy, 0.6, 0.0)).epsilon(1e-14));
}

TEST_CASE("perimeter deviation falls off as the inverse square of z_R") {
  const auto s = solve_coefficients(2);
  const double d = deviation_mark(s, BeamGeometry::reduced());
  double prev = 1e300;
  std::vector<double> scaled;
  for (double zeta : {50.0, 100.0, 200.0, 400.0}) {
    const double v = max_perimeter_deviation(config(2, zeta), d);
    CHECK(v < prev);
    prev = v;
    scaled.push_back(v * zeta * zeta);
  }
  CHECK(scaled[3] == doctest::Approx(scaled[2]).epsilon(2e-3));
  CHECK(scaled[2] == doctest::Approx(scaled[1]).epsilon(1e-2));
  CHECK_THROWS_AS((void)max_perimeter_deviation(config(2, 10.0), -1.0), ArgumentError);
  CHECK_THROWS_AS((void)max_perimeter_deviation(config(2, 10.0), d, 3), ArgumentError);
}

TEST_CASE("z_min sits exactly on the tolerance") {
  for (int j : {1, 5}) {
    const auto scan = find_zmin(j);
    CHECK(scan.order == 2 * j + 1);
    CHECK(scan.max_relative_deviation <= kDeviationTolerance);
    const auto s = solve_coefficients(j);
    const double d = deviation_mark(s, BeamGeometry::reduced());
    CHECK(scan.radius_in_waists == doctest::Approx(d));
    const double just_below = scan.rayleigh_in_waists * (1.0 - 1e-6);
    CHECK(max_perimeter_deviation(config(j, just_below), d) > kDeviationTolerance);
    CHECK(scan.zmin_in_wavelengths ==
          doctest::Approx(scan.rayleigh_in_waists * scan.rayleigh_in_waists / M_PI));
    CHECK(scan.opening_angle_deg == doctest::Approx(std::atan(1.0 / scan.rayleigh_in_waists) * 180 / M_PI));
    CHECK(!scan.trace.empty());
  }
}

TEST_CASE("z_min argument checks and failure diagnostics") {
  ZminOptions bad;
  bad.angles = 100;
  CHECK_THROWS_AS((void)find_zmin(1, bad), ArgumentError);
  bad = {};
  bad.tolerance = 0.5;
  CHECK_THROWS_AS((void)find_zmin(1, bad), ArgumentError);

  ZminOptions capped;
  capped.max_rayleigh_in_waists = 2.0;  // z_min of Psi_3 is above 4 waists
  try {
    (void)find_zmin(1, capped);
    FAIL("expected a numeric failure");
  } catch (const NumericError& e) {
    CHECK(std::string(e.what()).find("scan trace") != std::string::npos);
  }
}

TEST_CASE("parallel scan preserves order") {
  const auto scans = scan_zmin({2, 0, 1});
  REQUIRE(scans.size() == 3);
  CHECK(scans[0].order == 5);
  CHECK(scans[1].order == 1);
  CHECK(scans[2].order == 3);
  CHECK(scans[2].rayleigh_in_waists == doctest::Approx(find_zmin(1).rayleigh_in_waists).epsilon(1e-12));
}
