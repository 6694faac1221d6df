#pragma once

#include <optional>

#include "lcst/param_matrix.hpp"
#include "lcst/signal.hpp"

namespace lcst {

/// Normalization prefactor 1/sqrt(2*pi*i*B), principal branch.
cplx lct_normalization(const ParamMatrix& m);

/// Kernel K_M(t,xi) = (1/sqrt(2*pi*i*B)) exp(i/2 (A t^2/B - 2 xi t/B + D xi^2/B)).
cplx lct_kernel(const ParamMatrix& m, double t, double xi);

/// Transform of f at a single output point by trapezoid quadrature.
cplx lct_point(const Signal& f, const ParamMatrix& m, double xi);

/// Direct-quadrature transform. Output xi grid defaults to the input t grid;
/// pass xi_grid to override. Throws GridTooCoarse when the chirp phase
/// A t^2/(2B) advances more than pi between adjacent samples.
Signal lct_forward(const Signal& f, const ParamMatrix& m,
                   std::optional<GridSpec> xi_grid = std::nullopt);

/// Chirp/Fourier/chirp fast path; N must be a power of two. Output grid
/// equals the input grid; agrees with lct_forward to quadrature accuracy.
Signal lct_forward_fast(const Signal& f, const ParamMatrix& m);

/// Inverse via the inverse matrix (d,-b;-c,a); fast path used when the
/// length is a power of two.
Signal lct_inverse(const Signal& F, const ParamMatrix& m);

}  // namespace lcst
