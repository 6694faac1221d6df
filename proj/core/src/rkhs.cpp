#include "lcst/rkhs.hpp"

#include <cmath>
#include <numbers>

namespace lcst {

namespace {

Signal sample_window(const KernelContext& ctx, double a, double b) {
  const GridSpec& g = ctx.quad_grid;
  std::vector<cplx> s(g.n);
  for (std::size_t k = 0; k < g.n; ++k)
    s[k] = lcst_window(ctx.psi, ctx.m1, ctx.m2, a, b, g.at(k));
  return Signal(g.x0, g.dx, std::move(s));
}

}  // namespace

cplx reproducing_kernel(const KernelContext& ctx, double a, double b, double c,
                        double d) {
  if (!(a > 0) || !(c > 0))
    throw NonPositiveScale("kernel arguments need positive scales");
  if (!(ctx.c_value > 0))
    throw NonPositiveC("admissibility constant must be positive");
  const Signal wp = sample_window(ctx, a, b);
  const Signal wq = sample_window(ctx, c, d);
  const std::size_t n = wp.size();
  cplx acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double wt = (k == 0 || k + 1 == n) ? 0.5 : 1.0;
    acc += wt * wp[k] * std::conj(wq[k]);
  }
  const double denom =
      2.0 * std::numbers::pi * std::abs(ctx.m1.b) * ctx.c_value;
  return wp.dt() * acc / denom;
}

ResidualReport range_check(const CoefficientPlane& plane,
                           const KernelContext& ctx, std::size_t n_probes) {
  if (!(ctx.c_value > 0))
    throw NonPositiveC("admissibility constant must be positive");
  const auto& grid = plane.grid();
  const double denom =
      2.0 * std::numbers::pi * std::abs(ctx.m1.b) * ctx.c_value;
  const double rms = plane.rms();

  ResidualReport rep;
  if (rms == 0.0) return rep;  // zero plane reproduces itself exactly

  std::size_t count = 0;
  for (std::size_t pi = 0; pi < n_probes; ++pi) {
    const std::size_t i =
        (grid.n_scales() - 1) * (2 * pi + 1) / (2 * n_probes);
    for (std::size_t pj = 0; pj < n_probes; ++pj) {
      const std::size_t j =
          (grid.n_shifts() - 1) * (2 * pj + 1) / (2 * n_probes);
      const double c = grid.scales()[i];
      const double d = grid.shifts()[j];
      // <w_{a,b}, w_{c,d}> = conj of the transform of w_{c,d} at (a,b), so
      // one fast pass gives the kernel against every grid point.
      const Signal probe = sample_window(ctx, c, d);
      const auto kplane =
          lcst_forward_fast(probe, ctx.psi, ctx.m1, ctx.m2, grid);
      const cplx recon = CoefficientPlane::inner(plane, kplane) / denom;
      const double res = std::abs(recon - plane(i, j)) / rms;
      rep.max_residual = std::max(rep.max_residual, res);
      rep.mean_residual += res;
      ++count;
    }
  }
  rep.mean_residual /= static_cast<double>(count);
  return rep;
}

}  // namespace lcst
