#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lcst/grid.hpp"
#include "lcst/param_matrix.hpp"
#include "lcst/signal.hpp"

using namespace lcst;

TEST_CASE("matrix construction validates the determinant") {
  const auto m = sl2r_new(1, 1, 1, 2);
  CHECK(m.det() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(sl2r_new(1, 1, 1, 1), DeterminantError);
  CHECK_THROWS_AS(sl2r_new(0, 0, 0, 0), DeterminantError);
}

TEST_CASE("compose and inverse") {
  const auto m = sl2r_new(1, 1, 1, 2);
  const auto n = sl2r_new(0, 1, -1, 0);
  const auto mn = sl2r_compose(m, n);
  CHECK(mn.det() == doctest::Approx(1.0).epsilon(1e-12));
  // inverse(inverse(m)) = m exactly
  const auto mi = sl2r_inverse(sl2r_inverse(m));
  CHECK(mi.a == m.a);
  CHECK(mi.b == m.b);
  CHECK(mi.c == m.c);
  CHECK(mi.d == m.d);
  // m * m^-1 = identity
  const auto id = sl2r_compose(m, sl2r_inverse(m));
  CHECK(id.a == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(id.b == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("compose is associative on random unimodular triples") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int it = 0; it < 20; ++it) {
    auto rand_m = [&] {
      const double a = u(rng), b = u(rng) + 3.0, c = u(rng);
      return sl2r_new(a, b, c, (1.0 + b * c) / a == 0 ? 1 : (1.0 + b * c) / a);
    };
    ParamMatrix m, n, p;
    try {
      m = rand_m();
      n = rand_m();
      p = rand_m();
    } catch (const DeterminantError&) {
      continue;
    }
    const auto lhs = sl2r_compose(sl2r_compose(m, n), p);
    const auto rhs = sl2r_compose(m, sl2r_compose(n, p));
    CHECK(lhs.a == doctest::Approx(rhs.a).epsilon(1e-12));
    CHECK(lhs.b == doctest::Approx(rhs.b).epsilon(1e-12));
    CHECK(lhs.c == doctest::Approx(rhs.c).epsilon(1e-12));
    CHECK(lhs.d == doctest::Approx(rhs.d).epsilon(1e-12));
  }
}

TEST_CASE("rotation matrices") {
  const auto m = frft_matrix(0.5);
  CHECK(m.a == doctest::Approx(std::cos(0.5)));
  CHECK(m.b == doctest::Approx(std::sin(0.5)));
  CHECK_THROWS_AS(frft_matrix(0.0), DegenerateAngle);
  CHECK_THROWS_AS(frft_matrix(3.14159265358979323846), DegenerateAngle);
}

TEST_CASE("signal norm and inner product") {
  std::vector<cplx> v(4, cplx(1.0, 0.0));
  const Signal s(0.0, 0.5, v);
  CHECK(s.norm() == doctest::Approx(std::sqrt(0.5 * 4)));
  CHECK(Signal::inner(s, s).real() == doctest::Approx(2.0));
  CHECK_THROWS_AS(Signal(0.0, -1.0, v), ValidationError);
  CHECK_THROWS_AS(Signal(0.0, 1.0, std::vector<cplx>{1.0}), ValidationError);
}

TEST_CASE("scale-shift grid validation") {
  auto g = ScaleShiftGrid::make(0.5, 8.0, 16, -4.0, 4.0, 64);
  CHECK(g.n_scales() == 16);
  CHECK(g.n_shifts() == 64);
  CHECK(g.dlog_a() == doctest::Approx(std::log(16.0) / 15.0));
  CHECK(g.db() == doctest::Approx(8.0 / 63.0));
  // non-geometric scales rejected
  CHECK_THROWS_AS(ScaleShiftGrid({1.0, 2.0, 3.0}, {0.0, 1.0}),
                  ValidationError);
  CHECK_THROWS_AS(ScaleShiftGrid({-1.0, 1.0}, {0.0, 1.0}), ValidationError);
  // non-uniform shifts rejected
  CHECK_THROWS_AS(ScaleShiftGrid({1.0, 2.0}, {0.0, 1.0, 3.0}),
                  ValidationError);
}

TEST_CASE("plane energy uses the db da/a measure") {
  auto g = ScaleShiftGrid::make(1.0, std::exp(1.0), 2, 0.0, 1.0, 2);
  auto p = CoefficientPlane::zeros(g);
  p(0, 0) = p(0, 1) = p(1, 0) = p(1, 1) = 1.0;
  // trapezoid in log a over one unit, uniform b over one unit:
  // energy = sum w_i w_j |v|^2 db dlog = (0.5+0.5)*(1+1)*... = 1*2*... db=1
  CHECK(p.energy() == doctest::Approx(2.0));
  CHECK(p.rms() == doctest::Approx(1.0));
}
