#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lcst/lcst.hpp"

using namespace lcst;
namespace {

constexpr double kPi = std::numbers::pi;

Signal unit_gaussian(double t0, double dt, std::size_t n, double omega = 0.0) {
  std::vector<cplx> v(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = t0 + static_cast<double>(k) * dt;
    v[k] = std::exp(-0.5 * t * t) / std::pow(kPi, 0.25) *
           std::polar(1.0, omega * t);
  }
  return Signal(t0, dt, std::move(v));
}

double rel_frob(const CoefficientPlane& x, const CoefficientPlane& y) {
  double num = 0, den = 0;
  for (std::size_t i = 0; i < x.values().size(); ++i) {
    num += std::norm(x.values()[i] - y.values()[i]);
    den += std::norm(y.values()[i]);
  }
  return std::sqrt(num / den);
}

}  // namespace

TEST_CASE("window value reduces to the plain modulated window") {
  // classical matrices, a=1, b=0: window = e^{it} psi(t)
  const auto cl = sl2r_new(0, 1, -1, 0);
  const auto psi = WindowSpec::gaussian(1.0);
  for (double t : {0.0, 0.7, -2.3}) {
    const cplx got = lcst_window(psi, cl, cl, 1.0, 0.0, t);
    const cplx want = std::polar(1.0, t) * psi(t).real();
    CHECK(std::abs(got - want) < 1e-14);
  }
  // t = b, a = 1 kills all but the e^{ib/B1} phase
  const auto m1 = sl2r_new(1, 1, 1, 2);
  const cplx at_b = lcst_window(psi, m1, cl, 1.0, 0.5, 0.5);
  CHECK(std::abs(at_b - std::polar(1.0, 0.5) * psi(0.0).real()) < 1e-14);
  CHECK_THROWS_AS(lcst_window(psi, cl, cl, -1.0, 0, 0), NonPositiveScale);
}

TEST_CASE("window value frozen oracle") {
  const cplx got =
      lcst_window(WindowSpec::gaussian(1.0), sl2r_new(1, 1, 1, 2),
                  sl2r_new(1, 2, 0.5, 2), 2.0, 1.0, 1.5);
  CHECK(got.real() == doctest::Approx(-1.054765528798872).epsilon(1e-12));
  CHECK(got.imag() == doctest::Approx(0.5991556091228766).epsilon(1e-12));
}

TEST_CASE("forward transform frozen probe value") {
  const auto f = unit_gaussian(-16.0, 1.0 / 32, 1024);
  const auto grid = ScaleShiftGrid::make(1.0, 2.0, 2, 0.0, 1.0, 2);
  const auto plane =
      lcst_forward(f, WindowSpec::gaussian(1.0), sl2r_new(1, 1, 1, 2),
                   sl2r_new(0, 1, -1, 0), grid);
  CHECK(plane(0, 0).real() ==
        doctest::Approx(1.0219193183966233).epsilon(1e-9));
  CHECK(plane(0, 0).imag() ==
        doctest::Approx(0.1354990823659233).epsilon(1e-9));
}

TEST_CASE("zero signal gives a zero plane") {
  const Signal z(-8.0, 1.0 / 32, std::vector<cplx>(512, 0.0));
  const auto grid = ScaleShiftGrid::make(0.5, 2.0, 4, -2.0, 1.5, 8);
  const auto cl = sl2r_new(0, 1, -1, 0);
  for (const auto& p :
       {lcst_forward(z, WindowSpec::gaussian(1.0), cl, cl, grid),
        lcst_forward_fast(z, WindowSpec::gaussian(1.0), cl, cl, grid)}) {
    for (const auto& v : p.values()) CHECK(std::abs(v) == 0.0);
  }
}

TEST_CASE("classical preset reduces to the classical scale-shift loop") {
  const std::size_t n = 512;
  const double t0 = -8.0, dt = 1.0 / 32;
  const auto f = unit_gaussian(t0, dt, n, 3.0);
  const auto [m1, m2] = special_case(SpecialCase::Classical);
  const auto psi = WindowSpec::gaussian(1.0);
  const auto grid = ScaleShiftGrid::make(0.5, 4.0, 16, -4.0, 4.0, 256);
  const auto plane = lcst_forward(f, psi, m1, m2, grid);

  // independent direct loop: a Int f(t) conj(psi(a(t-b))) e^{-iat} dt
  double dev = 0.0;
  for (std::size_t i = 0; i < grid.n_scales(); ++i) {
    const double a = grid.scales()[i];
    for (std::size_t j = 0; j < grid.n_shifts(); ++j) {
      const double b = grid.shifts()[j];
      cplx acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        const double wt = (k == 0 || k + 1 == n) ? 0.5 : 1.0;
        const double t = t0 + k * dt;
        acc += wt * f[k] * a * std::conj(psi(a * (t - b))) *
               std::polar(1.0, -a * t);
      }
      dev = std::max(dev, std::abs(plane(i, j) - dt * acc));
    }
  }
  CHECK(dev < 1e-12);
}

TEST_CASE("fast path equals the direct path") {
  const auto f = unit_gaussian(-8.0, 1.0 / 32, 512, 3.0);
  const auto psi = WindowSpec::gaussian(1.0);
  // db = 2 dt, commensurate
  const auto grid = ScaleShiftGrid::make(0.5, 4.0, 16, -4.0, 3.9375, 128);
  SUBCASE("classical matrices") {
    const auto [m1, m2] = special_case(SpecialCase::Classical);
    CHECK(rel_frob(lcst_forward_fast(f, psi, m1, m2, grid),
                   lcst_forward(f, psi, m1, m2, grid)) < 1e-6);
  }
  SUBCASE("generic matrices") {
    const auto m1 = sl2r_new(1, 1, 1, 2);
    const auto m2 = sl2r_new(1, 2, 0.5, 2);
    CHECK(rel_frob(lcst_forward_fast(f, psi, m1, m2, grid),
                   lcst_forward(f, psi, m1, m2, grid)) < 1e-6);
  }
  SUBCASE("incommensurate shifts are rejected") {
    const auto [m1, m2] = special_case(SpecialCase::Classical);
    const auto bad = ScaleShiftGrid::make(0.5, 4.0, 4, -4.0, 4.0, 100);
    CHECK_THROWS_AS(lcst_forward_fast(f, psi, m1, m2, bad),
                    IncommensurateGrids);
  }
}

TEST_CASE("linearity in the signal and conjugate-linearity in the window") {
  const auto f = unit_gaussian(-8.0, 1.0 / 32, 512, 3.0);
  const auto g = unit_gaussian(-8.0, 1.0 / 32, 512, 5.0);
  const auto grid = ScaleShiftGrid::make(0.5, 2.0, 4, -2.0, 2.0, 16);
  const auto m1 = sl2r_new(1, 1, 1, 2);
  const auto m2 = sl2r_new(0, 1, -1, 0);
  const auto psi = WindowSpec::gaussian(1.0);
  const auto phi = WindowSpec::gaussian(2.0);
  const cplx alpha(0.3, -1.1), beta(-0.7, 0.2);

  SUBCASE("signal linearity") {
    std::vector<cplx> combo(f.size());
    for (std::size_t k = 0; k < f.size(); ++k)
      combo[k] = alpha * f[k] + beta * g[k];
    const auto pc = lcst_forward(Signal(f.t0(), f.dt(), std::move(combo)), psi,
                                 m1, m2, grid);
    const auto pf = lcst_forward(f, psi, m1, m2, grid);
    const auto pg = lcst_forward(g, psi, m1, m2, grid);
    double dev = 0.0;
    for (std::size_t i = 0; i < pc.values().size(); ++i)
      dev = std::max(dev, std::abs(pc.values()[i] - alpha * pf.values()[i] -
                                   beta * pg.values()[i]));
    CHECK(dev < 1e-12);
  }
  SUBCASE("window conjugate-linearity") {
    // combo window as a sampled spec on a fine grid
    const double ext = 20.0;
    const std::size_t nn = 8192;
    const double dt = 2 * ext / (nn - 1);
    std::vector<cplx> wv(nn);
    for (std::size_t k = 0; k < nn; ++k) {
      const double t = -ext + k * dt;
      wv[k] = alpha * psi(t) + beta * phi(t);
    }
    const auto combo = WindowSpec::sampled(Signal(-ext, dt, std::move(wv)));
    const auto pc = lcst_forward(f, combo, m1, m2, grid);
    const auto pp = lcst_forward(f, psi, m1, m2, grid);
    const auto pq = lcst_forward(f, phi, m1, m2, grid);
    double dev = 0.0;
    for (std::size_t i = 0; i < pc.values().size(); ++i)
      dev = std::max(dev,
                     std::abs(pc.values()[i] - std::conj(alpha) * pp.values()[i] -
                              std::conj(beta) * pq.values()[i]));
    // sampled-window interpolation limits the match, not the algebra:
    // evaluate on grid points only (a(t-b) lands off-grid), so allow the
    // interpolation error through a modest bound.
    CHECK(dev < 5e-6);
  }
}

TEST_CASE("covariance identities") {
  const std::size_t n = 1024;
  const double t0 = -16.0, dt = 1.0 / 32;
  const auto m1 = sl2r_new(1, 1, 1, 2);
  const auto m2 = sl2r_new(0, 1, -1, 0);
  const auto psi = WindowSpec::gaussian(1.0);

  SUBCASE("translation by y = 1") {
    const double y = 1.0;
    const auto f = unit_gaussian(t0, dt, n, 3.0);
    std::vector<cplx> sv(n);
    for (std::size_t k = 0; k < n; ++k) {
      const double t = t0 + k * dt;
      const double x = t - y;
      sv[k] = std::exp(-0.5 * x * x) / std::pow(kPi, 0.25) *
              std::polar(1.0, 3.0 * x);
    }
    const Signal fy(t0, dt, std::move(sv));
    const auto grid = ScaleShiftGrid::make(0.5, 2.0, 4, 0.0, 2.0, 8);
    const auto ps = lcst_forward(fy, psi, m1, m2, grid);
    double dev = 0.0;
    for (std::size_t i = 0; i < grid.n_scales(); ++i) {
      const double a = grid.scales()[i];
      for (std::size_t j = 0; j < grid.n_shifts(); ++j) {
        const double b = grid.shifts()[j];
        // modulate f by e^{i A1 y t / B1}, transform, then shift and phase
        std::vector<cplx> mv(n);
        for (std::size_t k = 0; k < n; ++k) {
          const double t = t0 + k * dt;
          mv[k] = f[k] * std::polar(1.0, m1.a * y * t / m1.b);
        }
        const Signal fm(t0, dt, std::move(mv));
        cplx probe = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double wt = (k == 0 || k + 1 == n) ? 0.5 : 1.0;
          probe += wt * fm[k] *
                   std::conj(lcst_window(psi, m1, m2, a, b - y, fm.t(k)));
        }
        probe *= dt;
        const cplx pref =
            std::polar(1.0, -a * y / m1.b - m1.a * y * (b - y) / m1.b);
        dev = std::max(dev, std::abs(ps(i, j) - pref * probe));
      }
    }
    CHECK(dev < 1e-6);
  }

  SUBCASE("dilation by lambda = 2") {
    const double lam = 2.0;
    const auto f = unit_gaussian(t0, dt, n, 3.0);
    // f(lambda t)
    std::vector<cplx> dv(n);
    for (std::size_t k = 0; k < n; ++k) {
      const double t = (t0 + k * dt) * lam;
      dv[k] = std::exp(-0.5 * t * t) / std::pow(kPi, 0.25) *
              std::polar(1.0, 3.0 * t);
    }
    const Signal fl(t0, dt, std::move(dv));
    const auto m1t =
        sl2r_new(m1.a / (lam * lam), m1.b, m1.c, m1.d * lam * lam);
    const auto grid = ScaleShiftGrid::make(1.0, 4.0, 4, -1.0, 1.0, 8);
    const auto ps = lcst_forward(fl, psi, m1, m2, grid);
    double dev = 0.0;
    for (std::size_t i = 0; i < grid.n_scales(); ++i) {
      const double a = grid.scales()[i];
      for (std::size_t j = 0; j < grid.n_shifts(); ++j) {
        const double b = grid.shifts()[j];
        cplx probe = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double wt = (k == 0 || k + 1 == n) ? 0.5 : 1.0;
          probe += wt * f[k] *
                   std::conj(lcst_window(psi, m1t, m2, a / lam, b * lam,
                                         f.t(k)));
        }
        probe *= dt;
        dev = std::max(dev, std::abs(ps(i, j) - probe));
      }
    }
    CHECK(dev < 1e-6);
  }
}

TEST_CASE("admissibility") {
  const auto psi = WindowSpec::gaussian(3.0);
  const auto [m1, m2] = special_case(SpecialCase::Classical);
  const std::vector<double> probes{0.5, 1.0, 2.0};

  SUBCASE("the B1 modulation variant is nearly probe-independent") {
    const auto rep =
        admissibility_constant(psi, m1, m2, probes, {0.1, 100.0, 256},
                               AdmissibilityVariant::ModOneOverB1);
    CHECK(rep.c_value > 0);
    CHECK(rep.relative_spread < 0.02);
  }
  SUBCASE("the scale-dependent modulation diverges on these probes") {
    CHECK_THROWS_AS(
        admissibility_constant(psi, m1, m2, probes, {0.1, 100.0, 256},
                               AdmissibilityVariant::ModOneOverB1a),
        NotAdmissible);
  }
  SUBCASE("parameter validation") {
    CHECK_THROWS_AS(
        admissibility_constant(psi, m1, m2, {1.0}, {0.1, 100.0, 256}),
        BadParams);
    CHECK_THROWS_AS(
        admissibility_constant(psi, m1, m2, probes, {-1.0, 100.0, 256}),
        BadParams);
  }
}

TEST_CASE("inverse transform basics") {
  const auto grid = ScaleShiftGrid::make(0.5, 2.0, 4, -2.0, 2.0, 8);
  const auto cl = sl2r_new(0, 1, -1, 0);
  const auto psi = WindowSpec::gaussian(1.0);
  SUBCASE("zero plane gives the zero signal") {
    const auto z = CoefficientPlane::zeros(grid);
    const auto f = lcst_inverse(z, psi, cl, cl, 1.0);
    for (const auto& v : f.samples()) CHECK(std::abs(v) == 0.0);
  }
  SUBCASE("the constant must be positive") {
    const auto z = CoefficientPlane::zeros(grid);
    CHECK_THROWS_AS(lcst_inverse(z, psi, cl, cl, 0.0), NonPositiveC);
    CHECK_THROWS_AS(lcst_inverse(z, psi, cl, cl, -2.0), NonPositiveC);
  }
}

TEST_CASE("special case factories") {
  const auto [c1, c2] = special_case(SpecialCase::Classical);
  CHECK(c1.a == 0);
  CHECK(c1.b == 1);
  CHECK(c1.c == -1);
  CHECK(c1.d == 0);
  CHECK(c2 == c1);

  const auto [f1, f2] = special_case(SpecialCase::Frst, kPi / 2, kPi / 2);
  CHECK(std::abs(f1.a) < 1e-12);
  CHECK(f1.b == doctest::Approx(1.0));
  CHECK(f1.c == doctest::Approx(-1.0));

  const auto [n1, n2] = special_case(SpecialCase::Fresnel, 1.0, 2.0);
  CHECK(n1.a == 1);
  CHECK(n1.b == 1);
  CHECK(n1.c == 0);
  CHECK(n2.b == 2);

  CHECK_THROWS_AS(special_case(SpecialCase::Frst, 0.0, 1.0), DegenerateAngle);
  CHECK_THROWS_AS(special_case(SpecialCase::Fresnel, 0.0, 1.0), ZeroB);
}
