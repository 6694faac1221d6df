#include "lcst/lcst.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lcst/fft.hpp"
#include "lcst/lct.hpp"
#include "lcst/parallel.hpp"

namespace lcst {

namespace {

constexpr double kPi = std::numbers::pi;

void require_b(const ParamMatrix& m1, const ParamMatrix& m2) {
  if (m1.b == 0.0 || m2.b == 0.0)
    throw ZeroB("both parameter matrices need a nonzero B entry");
}

inline double trap(std::size_t k, std::size_t n) {
  return (k == 0 || k + 1 == n) ? 0.5 : 1.0;
}

}  // namespace

cplx lcst_window(const WindowSpec& psi, const ParamMatrix& m1,
                 const ParamMatrix& m2, double a, double b, double t) {
  require_b(m1, m2);
  if (!(a > 0)) throw NonPositiveScale("scale parameter must be positive");
  const double x = t - b;
  const double ph = -0.5 * m1.a * (t * t - b * b) / m1.b +
                    0.5 * m2.a * a * a * x * x / m2.b + a * t / m1.b;
  return a * psi(a * x) * std::polar(1.0, ph);
}

CoefficientPlane lcst_forward(const Signal& f, const WindowSpec& psi,
                              const ParamMatrix& m1, const ParamMatrix& m2,
                              const ScaleShiftGrid& grid) {
  require_b(m1, m2);
  const std::size_t n = f.size();
  auto plane = CoefficientPlane::zeros(grid);
  parallel_for(grid.n_scales(), [&](std::size_t i) {
    const double a = grid.scales()[i];
    for (std::size_t j = 0; j < grid.n_shifts(); ++j) {
      const double b = grid.shifts()[j];
      cplx acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        const double t = f.t(k);
        acc += trap(k, n) * f[k] *
               std::conj(lcst_window(psi, m1, m2, a, b, t));
      }
      plane(i, j) = f.dt() * acc;
    }
  });
  return plane;
}

CoefficientPlane lcst_forward_fast(const Signal& f, const WindowSpec& psi,
                                   const ParamMatrix& m1,
                                   const ParamMatrix& m2,
                                   const ScaleShiftGrid& grid) {
  require_b(m1, m2);
  const std::size_t n = f.size();
  const double dt = f.dt(), db = grid.db();
  const double ratio = db / dt;
  const auto s = static_cast<long>(std::llround(ratio));
  if (s < 1 || std::abs(ratio - static_cast<double>(s)) > 1e-9 * ratio)
    throw IncommensurateGrids(
        "shift step must be an integer multiple of the signal step");

  const double off = grid.shifts()[0] - f.t0();  // b_0 - t_0
  auto plane = CoefficientPlane::zeros(grid);

  // Per scale: S(a,b) = e^{-i A1 b^2/(2B1)} dt sum_k u_k v(b - t_k), a
  // linear convolution on the common step.
  parallel_for(grid.n_scales(), [&](std::size_t i) {
    const double a = grid.scales()[i];
    std::vector<cplx> u(n);
    for (std::size_t k = 0; k < n; ++k) {
      const double t = f.t(k);
      const double ph = 0.5 * m1.a * t * t / m1.b - a * t / m1.b;
      u[k] = trap(k, n) * f[k] * std::polar(1.0, ph);
    }
    const std::size_t nv =
        static_cast<std::size_t>(s) * (grid.n_shifts() - 1) + n;
    std::vector<cplx> v(nv);
    for (std::size_t p = 0; p < nv; ++p) {
      const double x =
          off + (static_cast<double>(p) - static_cast<double>(n - 1)) * dt;
      const double ax = a * x;
      v[p] = std::conj(a * psi(-ax) *
                       std::polar(1.0, 0.5 * m2.a * ax * ax / m2.b));
    }
    const auto cv = fft::convolve(u, v);
    for (std::size_t j = 0; j < grid.n_shifts(); ++j) {
      const double b = grid.shifts()[j];
      plane(i, j) = dt * std::polar(1.0, -0.5 * m1.a * b * b / m1.b) *
                    cv[static_cast<std::size_t>(s) * j + n - 1];
    }
  });
  return plane;
}

AdmissibilityReport admissibility_constant(const WindowSpec& psi,
                                           const ParamMatrix& m1,
                                           const ParamMatrix& m2,
                                           const std::vector<double>& xi_probes,
                                           const ARange& a_range,
                                           AdmissibilityVariant variant) {
  require_b(m1, m2);
  if (!(a_range.a_min > 0) || !(a_range.a_max > a_range.a_min) ||
      a_range.n_log_steps < 2)
    throw BadParams("scale range needs 0 < a_min < a_max and >= 2 log steps");
  if (xi_probes.size() < 3)
    throw BadParams("at least 3 probe frequencies required");

  // Quadrature grid for the window transform.
  const double ext = psi.suggested_extent();
  const std::size_t nq = 4096;
  const double qdt = 2.0 * ext / static_cast<double>(nq - 1);
  std::vector<cplx> base(nq);
  for (std::size_t k = 0; k < nq; ++k) {
    const double t = -ext + static_cast<double>(k) * qdt;
    base[k] = psi(t);
  }

  const std::size_t na = a_range.n_log_steps + 1;
  const double dlog =
      std::log(a_range.a_max / a_range.a_min) / static_cast<double>(na - 1);

  AdmissibilityReport rep;
  rep.xi_probes = xi_probes;
  rep.variant = variant;
  std::vector<double> tail(xi_probes.size());
  rep.per_probe_values.resize(xi_probes.size());

  for (std::size_t p = 0; p < xi_probes.size(); ++p) {
    const double xi = xi_probes[p];
    std::vector<double> integrand(na);
    parallel_for(na, [&](std::size_t ia) {
      const double a =
          a_range.a_min * std::exp(dlog * static_cast<double>(ia));
      const double wmod = (variant == AdmissibilityVariant::ModOneOverB1)
                              ? 1.0 / m1.b
                              : 1.0 / (m1.b * a);
      std::vector<cplx> g(nq);
      for (std::size_t k = 0; k < nq; ++k) {
        const double t = -ext + static_cast<double>(k) * qdt;
        g[k] = base[k] * std::polar(1.0, wmod * t);
      }
      const Signal gs(-ext, qdt, std::move(g));
      const cplx val = lct_point(gs, m2, m2.b * xi / (m1.b * a));
      integrand[ia] = std::norm(val);
    });
    double acc = 0.0;
    for (std::size_t ia = 0; ia < na; ++ia)
      acc += trap(ia, na) * integrand[ia];
    rep.per_probe_values[p] = acc * dlog;
    tail[p] = integrand[na - 1];
  }

  double sum = 0.0, lo = rep.per_probe_values[0], hi = lo;
  for (double v : rep.per_probe_values) {
    sum += v;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  rep.c_value = sum / static_cast<double>(rep.per_probe_values.size());
  rep.relative_spread = rep.c_value > 0 ? (hi - lo) / rep.c_value : 0.0;

  if (rep.c_value < 1e-12)
    throw NotAdmissible("admissibility constant is numerically zero");
  for (std::size_t p = 0; p < xi_probes.size(); ++p) {
    // Growth per decade at the upper truncation relative to the integral.
    const double growth =
        tail[p] * std::numbers::ln10 / rep.per_probe_values[p];
    if (growth > 0.01)
      throw NotAdmissible(
          "scale integral still growing at a_max (divergent admissibility "
          "integrand at probe " +
          std::to_string(xi_probes[p]) + ")");
  }
  return rep;
}

Signal lcst_inverse(const CoefficientPlane& plane, const WindowSpec& psi,
                    const ParamMatrix& m1, const ParamMatrix& m2,
                    double c_value, std::optional<GridSpec> t_grid) {
  require_b(m1, m2);
  if (!(c_value > 0))
    throw NonPositiveC("admissibility constant must be positive");
  const auto& grid = plane.grid();
  GridSpec g = t_grid ? *t_grid
                      : GridSpec{grid.shifts()[0], grid.db(), grid.n_shifts()};

  const double dlog = grid.dlog_a();
  const double db = grid.db();
  const double scale = 1.0 / (2.0 * kPi * std::abs(m1.b) * c_value);
  const std::size_t ns = grid.n_scales(), nb = grid.n_shifts();

  std::vector<cplx> out(g.n);
  parallel_for(g.n, [&](std::size_t jt) {
    const double t = g.at(jt);
    cplx acc = 0.0;
    for (std::size_t i = 0; i < ns; ++i) {
      const double a = grid.scales()[i];
      const double w = trap(i, ns) * dlog * db;
      cplx row = 0.0;
      for (std::size_t j = 0; j < nb; ++j)
        row += plane(i, j) * lcst_window(psi, m1, m2, a, grid.shifts()[j], t);
      acc += w * row;
    }
    out[jt] = scale * acc;
  });
  return Signal(g.x0, g.dx, std::move(out));
}

std::pair<ParamMatrix, ParamMatrix> special_case(SpecialCase kind, double p1,
                                                 double p2) {
  switch (kind) {
    case SpecialCase::Classical:
      return {sl2r_new(0, 1, -1, 0), sl2r_new(0, 1, -1, 0)};
    case SpecialCase::Frst:
      return {frft_matrix(p1), frft_matrix(p2)};
    case SpecialCase::Fresnel:
      if (p1 == 0.0 || p2 == 0.0)
        throw ZeroB("Fresnel shear parameters must be nonzero");
      return {sl2r_new(1, p1, 0, 1), sl2r_new(1, p2, 0, 1)};
  }
  throw BadParams("unknown special case");
}

}  // namespace lcst
