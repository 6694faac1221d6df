#pragma once

#include "lcst/param_matrix.hpp"
#include "lcst/signal.hpp"
#include "lcst/window.hpp"

namespace lcst {

/// Center and radius of a window under the |w|^2 probability weight.
struct WindowGeometry {
  double center = 0.0;
  double radius = 0.0;
};

/// Joint time/spectral resolution cell of the transform at (a, b).
struct TFRectangle {
  double time_lo = 0.0, time_hi = 0.0;
  double spectral_lo = 0.0, spectral_hi = 0.0;
  double area = 0.0;
};

WindowGeometry window_geometry(const Signal& w);
WindowGeometry window_geometry(const WindowSpec& w);

/// Geometry of a psi(a(t-b)): center E/a + b, radius R/a.
WindowGeometry scaled_window_geometry(const WindowGeometry& g, double a,
                                      double b);

/// Geometry of the spectral window at scale a: both center and radius pick
/// up the factor B1 a / B2. Requires B1 B2 > 0.
WindowGeometry spectral_window_geometry(const WindowGeometry& g,
                                        const ParamMatrix& m1,
                                        const ParamMatrix& m2, double a);

/// Q = radius / center of the spectral window; independent of a.
double q_factor(const WindowGeometry& g);

/// Resolution rectangle; its area 4 (B1/B2) R_psi R_Psi does not depend on
/// (a, b).
TFRectangle tf_rectangle(const WindowGeometry& psi_geom,
                         const WindowGeometry& Psi_geom, const ParamMatrix& m1,
                         const ParamMatrix& m2, double a, double b);

/// The spectral window Psi: transform of e^{i t / B1} psi(t) under m2,
/// sampled on the given xi grid.
Signal spectral_window(const WindowSpec& psi, const ParamMatrix& m1,
                       const ParamMatrix& m2, const GridSpec& xi_grid);

}  // namespace lcst
