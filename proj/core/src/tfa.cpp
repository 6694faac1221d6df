#include "lcst/tfa.hpp"

#include <cmath>

#include "lcst/errors.hpp"
#include "lcst/lct.hpp"

namespace lcst {

WindowGeometry window_geometry(const Signal& w) {
  const std::size_t n = w.size();
  double mass = 0.0, first = 0.0;
  std::vector<double> dens(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double wt = (k == 0 || k + 1 == n) ? 0.5 : 1.0;
    dens[k] = std::norm(w[k]);
    mass += wt * dens[k];
    first += wt * w.t(k) * dens[k];
  }
  if (mass <= 0.0) throw ZeroWindow("window has zero energy");
  const double center = first / mass;

  double second = 0.0, peak = 0.0;
  std::vector<double> integrand(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = w.t(k) - center;
    integrand[k] = x * x * dens[k];
    peak = std::max(peak, integrand[k]);
    const double wt = (k == 0 || k + 1 == n) ? 0.5 : 1.0;
    second += wt * integrand[k];
  }
  // The second-moment integrand must have decayed at the grid edges,
  // otherwise the radius is an artifact of the truncation.
  const double edge = std::max(integrand[0], integrand[n - 1]);
  if (peak > 0 && edge > 1e-6 * peak)
    throw DivergentMoment(
        "second-moment integrand has not decayed at the grid edge");
  return {center, std::sqrt(second / mass)};
}

WindowGeometry window_geometry(const WindowSpec& w) {
  const double ext = w.suggested_extent() * 1.5;
  const std::size_t n = 8192;
  const double dt = 2.0 * ext / static_cast<double>(n - 1);
  std::vector<cplx> s(n);
  for (std::size_t k = 0; k < n; ++k)
    s[k] = w(-ext + static_cast<double>(k) * dt);
  return window_geometry(Signal(-ext, dt, std::move(s)));
}

WindowGeometry scaled_window_geometry(const WindowGeometry& g, double a,
                                      double b) {
  if (!(a > 0)) throw NonPositiveScale("scale parameter must be positive");
  return {g.center / a + b, g.radius / a};
}

WindowGeometry spectral_window_geometry(const WindowGeometry& g,
                                        const ParamMatrix& m1,
                                        const ParamMatrix& m2, double a) {
  if (!(a > 0)) throw NonPositiveScale("scale parameter must be positive");
  if (!(m1.b * m2.b > 0))
    throw SignMismatch("spectral geometry requires B1 B2 > 0");
  const double s = m1.b * a / m2.b;
  return {s * g.center, s * g.radius};
}

double q_factor(const WindowGeometry& g) {
  if (std::abs(g.center) <= 1e-12 * (std::abs(g.center) + g.radius))
    throw ZeroCenter("Q factor undefined for a window centered at zero");
  return g.radius / g.center;
}

TFRectangle tf_rectangle(const WindowGeometry& psi_geom,
                         const WindowGeometry& Psi_geom, const ParamMatrix& m1,
                         const ParamMatrix& m2, double a, double b) {
  const auto tg = scaled_window_geometry(psi_geom, a, b);
  const auto sg = spectral_window_geometry(Psi_geom, m1, m2, a);
  TFRectangle r;
  r.time_lo = tg.center - tg.radius;
  r.time_hi = tg.center + tg.radius;
  r.spectral_lo = sg.center - sg.radius;
  r.spectral_hi = sg.center + sg.radius;
  // 2R/a * 2(B1 a/B2)R' = 4(B1/B2) R R', independent of (a, b).
  r.area = 4.0 * (m1.b / m2.b) * psi_geom.radius * Psi_geom.radius;
  return r;
}

Signal spectral_window(const WindowSpec& psi, const ParamMatrix& m1,
                       const ParamMatrix& m2, const GridSpec& xi_grid) {
  if (m1.b == 0.0) throw ZeroB("modulation frequency 1/B1 undefined");
  const double ext = psi.suggested_extent();
  const std::size_t n = 8192;
  const double dt = 2.0 * ext / static_cast<double>(n - 1);
  std::vector<cplx> s(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = -ext + static_cast<double>(k) * dt;
    s[k] = psi(t) * std::polar(1.0, t / m1.b);
  }
  return lct_forward(Signal(-ext, dt, std::move(s)), m2, xi_grid);
}

}  // namespace lcst
