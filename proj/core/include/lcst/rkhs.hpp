#pragma once

#include "lcst/grid.hpp"
#include "lcst/lcst.hpp"

namespace lcst {

/// Everything needed to evaluate the coefficient-space reproducing kernel:
/// the analyzing window, both matrices, the admissibility constant, and the
/// time grid used for window inner products.
struct KernelContext {
  WindowSpec psi;
  ParamMatrix m1;
  ParamMatrix m2;
  double c_value = 0.0;
  GridSpec quad_grid;
};

struct ResidualReport {
  double max_residual = 0.0;
  double mean_residual = 0.0;
};

/// K(p; q) = <window_p, window_q> / (2 pi |B1| C), trapezoid quadrature on
/// ctx.quad_grid. Hermitian: K(p;q) = conj(K(q;p)).
cplx reproducing_kernel(const KernelContext& ctx, double a, double b, double c,
                        double d);

/// Checks that the plane satisfies the reproducing identity
/// F(c,d) = (1/(2 pi |B1| C)) integral F(a,b) <w_{a,b}, w_{c,d}> da db / a
/// at an n_probes x n_probes index-uniform subsample. Residuals are relative
/// to the plane RMS.
ResidualReport range_check(const CoefficientPlane& plane,
                           const KernelContext& ctx,
                           std::size_t n_probes = 4);

}  // namespace lcst
