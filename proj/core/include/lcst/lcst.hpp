#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lcst/grid.hpp"
#include "lcst/param_matrix.hpp"
#include "lcst/signal.hpp"
#include "lcst/window.hpp"

namespace lcst {

/// Which modulation enters the admissibility integrand: e^{it/B1} or
/// e^{it/(B1 a)}. Both are provided; only ModOneOverB1 makes the plane
/// energy identity close, ModOneOverB1a is the default analysis definition.
enum class AdmissibilityVariant { ModOneOverB1, ModOneOverB1a };

struct AdmissibilityReport {
  double c_value = 0.0;
  std::vector<double> xi_probes;
  std::vector<double> per_probe_values;
  double relative_spread = 0.0;  // (max - min) / mean over probes
  AdmissibilityVariant variant = AdmissibilityVariant::ModOneOverB1a;
};

/// The analyzing window of the transform at scale a, shift b, evaluated at t:
/// a psi(a(t-b)) exp(i[-A1(t^2-b^2)/(2B1) + A2 a^2 (t-b)^2/(2B2) + a t/B1]).
cplx lcst_window(const WindowSpec& psi, const ParamMatrix& m1,
                 const ParamMatrix& m2, double a, double b, double t);

/// Direct quadrature: values[i][j] = dt * sum_k w_k f_k conj(window(a_i,b_j,t_k))
/// with trapezoid weights w_k.
CoefficientPlane lcst_forward(const Signal& f, const WindowSpec& psi,
                              const ParamMatrix& m1, const ParamMatrix& m2,
                              const ScaleShiftGrid& grid);

/// Per-scale fast convolution path; requires the shift step to be an integer
/// multiple of the signal step. Matches lcst_forward to machine precision.
CoefficientPlane lcst_forward_fast(const Signal& f, const WindowSpec& psi,
                                   const ParamMatrix& m1,
                                   const ParamMatrix& m2,
                                   const ScaleShiftGrid& grid);

struct ARange {
  double a_min;
  double a_max;
  std::size_t n_log_steps;
};

/// Scale-integrated spectral energy of the modulated window, evaluated at
/// each probe xi by log-trapezoid quadrature. Throws NotAdmissible when the
/// value is negligible or the integral is still growing at a_max.
AdmissibilityReport admissibility_constant(
    const WindowSpec& psi, const ParamMatrix& m1, const ParamMatrix& m2,
    const std::vector<double>& xi_probes, const ARange& a_range,
    AdmissibilityVariant variant = AdmissibilityVariant::ModOneOverB1a);

/// Reconstruction f(t) = (1/(2 pi |B1| C)) sum S(a,b) window(a,b,t) da db / a.
/// Output grid defaults to the plane's shift grid.
Signal lcst_inverse(const CoefficientPlane& plane, const WindowSpec& psi,
                    const ParamMatrix& m1, const ParamMatrix& m2,
                    double c_value,
                    std::optional<GridSpec> t_grid = std::nullopt);

enum class SpecialCase { Classical, Frst, Fresnel };

/// Matrix pairs of the named special cases: classical Stockwell,
/// fractional (rotation angles alpha, beta), Fresnel (shears B1, B2).
std::pair<ParamMatrix, ParamMatrix> special_case(SpecialCase kind,
                                                 double p1 = 0.0,
                                                 double p2 = 0.0);

}  // namespace lcst
