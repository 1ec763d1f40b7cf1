#include <cmath>

#include "doctest.h"
#include "hglens/error.hpp"
#include "hglens/superposition.hpp"
#include "oracles.hpp"

using namespace hglens;

namespace {

oracle::cplx oracle_focal(const ModeSuperposition& s, oracle::cplx xi) {
  oracle::cplx f = 0.0;
  for (int j = 0; j <= s.cutoff(); ++j) f += s.coefficients()[j] * oracle::hermite_fn(2 * j + 1, xi);
  return f;
}

}  // namespace

TEST_CASE("taylor matrix entries from hand expansion") {
  const double rpi = std::sqrt(oracle::pi);
  const auto t1 = taylor_matrix(1);
  CHECK(t1.size() == 2);
  CHECK(t1.at(0, 0) == doctest::Approx(2.0 / std::sqrt(2.0 * rpi)).epsilon(1e-15));
  CHECK(t1.at(1, 0) == doctest::Approx(-1.0 / std::sqrt(2.0 * rpi)).epsilon(1e-15));
  CHECK(t1.at(0, 1) == doctest::Approx(-12.0 / std::sqrt(48.0 * rpi)).epsilon(1e-15));
  CHECK(t1.at(1, 1) == doctest::Approx(14.0 / std::sqrt(48.0 * rpi)).epsilon(1e-15));

  const auto t2 = taylor_matrix(2);
  const double n5 = std::sqrt(3840.0 * rpi);
  CHECK(t2.at(0, 2) == doctest::Approx(120.0 / n5).epsilon(1e-15));
  CHECK(t2.at(1, 2) == doctest::Approx(-220.0 / n5).epsilon(1e-15));
  CHECK(t2.at(2, 2) == doctest::Approx(127.0 / n5).epsilon(1e-15));
}

TEST_CASE("closed-form coefficient ratios") {
  const auto s1 = solve_coefficients(1);
  CHECK(s1.coefficient(3) / s1.coefficient(1) == doctest::Approx(std::sqrt(6.0) / 7.0).epsilon(1e-14));

  const auto s2 = solve_coefficients(2);
  CHECK(s2.coefficient(3) / s2.coefficient(1) ==
        doctest::Approx(18.0 * std::sqrt(6.0) / 71.0).epsilon(1e-13));
  CHECK(s2.coefficient(5) / s2.coefficient(1) ==
        doctest::Approx(2.0 * std::sqrt(30.0) / 71.0).epsilon(1e-13));

  const auto s0 = solve_coefficients(0);
  CHECK(s0.coefficients().size() == 1);
  CHECK(s0.coefficient(1) == 1.0);
  CHECK_THROWS_AS((void)s0.coefficient(3), ArgumentError);
  CHECK_THROWS_AS((void)solve_coefficients(-1), ArgumentError);
}

TEST_CASE("superpositions are normalized, positive and gain order") {
  for (int j = 0; j <= 27; ++j) {
    const auto s = solve_coefficients(j);
    CHECK(s.cutoff() == j);
    CHECK(s.max_order() == 2 * j + 1);
    double n2 = 0.0;
    for (double c : s.coefficients()) {
      CHECK(c > 0.0);
      n2 += c * c;
    }
    CHECK(n2 == doctest::Approx(1.0).epsilon(1e-14));
  }
  const ModeSuperposition flipped({-2.0, -1.0});
  CHECK(flipped.coefficient(1) > 0.0);
  CHECK_THROWS_AS(ModeSuperposition({}), ArgumentError);
  CHECK_THROWS_AS(ModeSuperposition({0.0, 0.0}), ArgumentError);
}

TEST_CASE("cauchy integral confirms the taylor cancellation") {
  for (int j : {1, 2, 4, 8, 12, 16}) {
    const auto s = solve_coefficients(j);
    const int kmax = 2 * j + 3;
    const auto a = oracle::taylor_by_cauchy([&](oracle::cplx z) { return oracle_focal(s, z); }, kmax);
    const double slope = a[1];
    CHECK(slope == doctest::Approx(focal_slope(s)).epsilon(1e-10));
    for (int k = 3; k <= 2 * j + 1; k += 2) CHECK(std::abs(a[k] / slope) <= 1e-10);
    // The first surviving odd term is genuinely nonzero (it shrinks factorially with J).
    if (j <= 2) CHECK(std::abs(a[2 * j + 3] / slope) > 1e-4);
    // Even terms vanish by parity.
    for (int k = 0; k <= kmax; k += 2) CHECK(std::abs(a[k]) <= 1e-12);

    const auto lib = taylor_coefficients(s);
    REQUIRE(lib.size() == static_cast<std::size_t>(j + 1));
    CHECK(lib[0] == doctest::Approx(slope).epsilon(1e-10));
    for (int k = 1; k <= j; ++k) CHECK(std::abs(lib[k] / slope) <= 1e-10);
  }
}

TEST_CASE("focal profile helpers agree with finite differences") {
  const auto s = solve_coefficients(5);
  const double h = 1e-5;
  for (double xi : {0.0, 0.4, 1.3, 2.8}) {
    const double fd = (focal_profile(s, xi + h) - focal_profile(s, xi - h)) / (2 * h);
    CHECK(focal_profile_derivative(s, xi) == doctest::Approx(fd).epsilon(1e-8));
  }
  CHECK(focal_profile(s, 0.0) == 0.0);
  CHECK(std::abs(dephased_profile(s, 0.7, 0.0) - focal_profile(s, 0.7)) < 1e-15);
}

TEST_CASE("integrated intensity symmetries and normalization") {
  const auto g = BeamGeometry::reduced(25.0);
  for (int j : {0, 3, 9}) {
    const auto s = solve_coefficients(j);
    for (double z : {0.0, 7.0, 40.0}) {
      for (double x : {0.3, 1.1, 2.5}) {
        const double i = integrated_intensity(s, x, z, g);
        CHECK(i == doctest::Approx(integrated_intensity(s, -x, z, g)).epsilon(1e-14));
        CHECK(i == doctest::Approx(integrated_intensity(s, x, -z, g)).epsilon(1e-14));
      }
      const double w = beam_radius(z, g.x_axis());
      const double total = oracle::integrate(
          [&](double x) { return integrated_intensity(s, x, z, g); }, -14 * w, 14 * w, 300);
      CHECK(total == doctest::Approx(1.0).epsilon(1e-11));
    }
    CHECK(integrated_intensity(s, 0.0, 3.0, g) == 0.0);
  }
}

TEST_CASE("integrated intensity equals y-integral of the full field") {
  const auto g = BeamGeometry::from_waists(0.8, 1.0, 1.7);
  const auto s = solve_coefficients(3);
  for (double z : {0.0, 2.0, -5.0}) {
    for (double x : {0.4, 1.6}) {
      const double wy = beam_radius(z, g.y_axis());
      const double direct = oracle::integrate(
          [&](double y) {
            oracle::cplx e = 0.0;
            for (int j = 0; j <= s.cutoff(); ++j) {
              e += s.coefficients()[j] * hg_mode({2 * j + 1, 0}, {x, y, z}, g);
            }
            return std::norm(e);
          },
          -12 * wy, 12 * wy, 200);
      CHECK(integrated_intensity(s, x, z, g) == doctest::Approx(direct).epsilon(1e-11));
      CHECK(std::norm(field(s, x, z, g)) * std::sqrt(oracle::pi / 2.0) * wy ==
            doctest::Approx(direct).epsilon(1e-11));
    }
  }
}

TEST_CASE("integrated intensity propagates like a Fresnel diffraction integral") {
  const auto g = BeamGeometry::reduced(6.0);
  const double k = g.wavenumber();
  const auto s = solve_coefficients(4);
  auto e0 = [&](double xp) {
    oracle::cplx e = 0.0;
    const double xi = std::sqrt(2.0) * xp;
    for (int j = 0; j <= s.cutoff(); ++j) {
      e += s.coefficients()[j] * std::pow(2.0, 0.25) * oracle::hermite_fn(2 * j + 1, xi);
    }
    return e;
  };
  for (double z : {1.5, 6.0, 15.0}) {
    const double peak = peak_integrated_intensity(s, g);
    for (double x : {0.2, 1.0, 2.4, 3.7}) {
      const double ref = std::norm(oracle::fresnel(e0, x, z, k, 9.0, 1600));
      CHECK(std::abs(integrated_intensity(s, x, z, g) - ref) <= 1e-8 * peak);
    }
  }
}

TEST_CASE("integrated intensity gradient matches finite differences") {
  const auto g = BeamGeometry::reduced(12.0);
  const auto s = solve_coefficients(6);
  const double h = 1e-5;
  for (double z : {0.0, 5.0}) {
    for (double x : {0.25, 1.4, 3.0}) {
      const double fd =
          (integrated_intensity(s, x + h, z, g) - integrated_intensity(s, x - h, z, g)) / (2 * h);
      CHECK(integrated_intensity_dx(s, x, z, g) == doctest::Approx(fd).epsilon(1e-6));
    }
  }
}

TEST_CASE("turning points and grids") {
  const auto g = BeamGeometry::reduced();
  // Psi_1: I ~ xi^2 exp(-xi^2) peaks at xi = 1, x = w0 / sqrt2.
  CHECK(outermost_turning_point(ModeSuperposition::single_mode(), g) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
  const auto s = solve_coefficients(8);
  const double xt = outermost_turning_point(s, g);
  CHECK(integrated_intensity_dx(s, xt, 0.0, g) == doctest::Approx(0.0).scale(1e-6));
  CHECK(integrated_intensity(s, xt, 0.0, g) <= peak_integrated_intensity(s, g) * (1 + 1e-12));

  const auto grid = uniform_grid(2.0, 5);
  CHECK(grid == std::vector<double>{-2.0, -1.0, 0.0, 1.0, 2.0});
  CHECK_THROWS_AS((void)uniform_grid(1.0, 1), ArgumentError);
}
