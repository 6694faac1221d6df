#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lcst/lcst.hpp"
#include "lcst/tfa.hpp"

using namespace lcst;

TEST_CASE("gaussian center and radius") {
  // |e^{-t^2/2}|^2 = e^{-t^2}: center 0, radius 1/sqrt(2)
  const auto g = window_geometry(WindowSpec::gaussian(1.0));
  CHECK(std::abs(g.center) < 1e-12);
  CHECK(g.radius == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("shifted gaussian moves the center only") {
  const std::size_t n = 4096;
  const double t0 = -13.0, dt = 32.0 / (n - 1);
  std::vector<cplx> v(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = t0 + k * dt;
    v[k] = std::exp(-0.5 * (t - 3.0) * (t - 3.0));
  }
  const auto g = window_geometry(Signal(t0, dt, std::move(v)));
  CHECK(g.center == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(g.radius == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("degenerate windows are rejected") {
  const Signal z(-1.0, 0.01, std::vector<cplx>(256, 0.0));
  CHECK_THROWS_AS(window_geometry(z), ZeroWindow);
  // constant ones: second moment never decays on any finite grid
  const Signal ones(-1.0, 0.01, std::vector<cplx>(256, 1.0));
  CHECK_THROWS_AS(window_geometry(ones), DivergentMoment);
}

TEST_CASE("scaled geometry") {
  CHECK(scaled_window_geometry({0, 1}, 2, 3).center == doctest::Approx(3));
  CHECK(scaled_window_geometry({0, 1}, 2, 3).radius == doctest::Approx(0.5));
  CHECK(scaled_window_geometry({1, 2}, 1, 0).center == doctest::Approx(1));
  CHECK(scaled_window_geometry({1, 2}, 1, 0).radius == doctest::Approx(2));
  CHECK(scaled_window_geometry({1, 1}, 4, -1).center ==
        doctest::Approx(-0.75));
  CHECK(scaled_window_geometry({1, 1}, 4, -1).radius == doctest::Approx(0.25));
  CHECK_THROWS_AS(scaled_window_geometry({0, 1}, -1, 0), NonPositiveScale);
  // identity scale leaves the geometry untouched exactly
  const WindowGeometry g{0.37, 1.21};
  const auto h = scaled_window_geometry(g, 1, 0);
  CHECK(h.center == g.center);
  CHECK(h.radius == g.radius);
}

TEST_CASE("spectral geometry") {
  const auto eq = sl2r_new(0, 1, -1, 0);
  auto g = spectral_window_geometry({1, 0.5}, eq, eq, 1.0);
  CHECK(g.center == doctest::Approx(1));
  CHECK(g.radius == doctest::Approx(0.5));
  g = spectral_window_geometry({2, 1}, sl2r_new(0, 1, -1, 0),
                               sl2r_new(0, 2, -0.5, 0), 4.0);
  CHECK(g.center == doctest::Approx(4));
  CHECK(g.radius == doctest::Approx(2));
  CHECK_THROWS_AS(
      spectral_window_geometry({1, 1}, sl2r_new(0, 1, -1, 0),
                               sl2r_new(0, -1, 1, 0), 1.0),
      SignMismatch);
}

TEST_CASE("Q factor is scale-invariant") {
  CHECK(q_factor({2, 1}) == doctest::Approx(0.5));
  CHECK_THROWS_AS(q_factor({0, 1}), ZeroCenter);
  const WindowGeometry base{1.3, 0.4};
  const auto m1 = sl2r_new(1, 1, 1, 2);
  const auto m2 = sl2r_new(1, 2, 0.5, 2);
  const double q1 = q_factor(spectral_window_geometry(base, m1, m2, 1.0));
  for (double a : {0.5, 2.0, 8.0}) {
    const double q = q_factor(spectral_window_geometry(base, m1, m2, a));
    CHECK(std::abs(q - q1) < 1e-12);
  }
}

TEST_CASE("resolution rectangle has constant area") {
  const auto eq = sl2r_new(0, 1, -1, 0);
  SUBCASE("unit radii, equal B") {
    for (double a : {0.5, 1.0, 8.0})
      for (double b : {-3.0, 0.0, 2.0}) {
        const auto r = tf_rectangle({0, 1}, {1, 1}, eq, eq, a, b);
        CHECK(std::abs(r.area - 4.0) < 1e-12);
        CHECK(std::abs((r.time_hi - r.time_lo) *
                           (r.spectral_hi - r.spectral_lo) -
                       r.area) < 1e-12);
      }
  }
  SUBCASE("plug-in with unequal B") {
    const auto r = tf_rectangle({0, 0.5}, {1, 2}, sl2r_new(0, 1, -1, 0),
                                sl2r_new(0, 2, -0.5, 0), 1.0, 0.0);
    CHECK(r.area == doctest::Approx(2.0));
  }
}

TEST_CASE("spectral window sampling feeds the moment engine") {
  // classical matrices: Psi = FT of e^{it} gaussian, centered near 1
  const auto eq = sl2r_new(0, 1, -1, 0);
  const GridSpec xi{-16.0, 32.0 / 4095.0, 4096};
  const auto Psi = spectral_window(WindowSpec::gaussian(1.0), eq, eq, xi);
  const auto g = window_geometry(Psi);
  CHECK(g.center == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(g.radius == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-6));
}

TEST_CASE("sampled scaled windows match the closed-form geometry") {
  const auto psi = WindowSpec::gaussian(1.0);
  const auto base = window_geometry(psi);
  const auto m1 = sl2r_new(1, 1, 1, 2);
  const auto m2 = sl2r_new(0, 1, -1, 0);
  for (double a : {1.0, 2.0}) {
    const double b = 0.5;
    const std::size_t n = 8192;
    const double t0 = -20.0, dt = 40.0 / (n - 1);
    std::vector<cplx> v(n);
    for (std::size_t k = 0; k < n; ++k)
      v[k] = lcst_window(psi, m1, m2, a, b, t0 + k * dt);
    const auto g = window_geometry(Signal(t0, dt, std::move(v)));
    const auto want = scaled_window_geometry(base, a, b);
    CHECK(std::abs(g.center - want.center) < 1e-4);
    CHECK(std::abs(g.radius - want.radius) < 1e-4);
  }
}
