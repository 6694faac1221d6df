#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "lcst/errors.hpp"
#include "lcst/signal.hpp"

namespace lcst {

/// Scale-shift grid of the coefficient plane: geometric scales a > 0,
/// uniform shifts b. The measure da/a becomes a constant log-step weight.
class ScaleShiftGrid {
 public:
  ScaleShiftGrid(std::vector<double> scales, std::vector<double> shifts);

  /// n scales geometrically spaced over [a_min, a_max] and n_b shifts
  /// uniformly spaced over [b_min, b_max].
  static ScaleShiftGrid make(double a_min, double a_max, std::size_t n_scales,
                             double b_min, double b_max, std::size_t n_shifts);

  const std::vector<double>& scales() const { return scales_; }
  const std::vector<double>& shifts() const { return shifts_; }
  std::size_t n_scales() const { return scales_.size(); }
  std::size_t n_shifts() const { return shifts_.size(); }

  /// Constant step of log(a).
  double dlog_a() const;
  /// Constant shift step.
  double db() const;

 private:
  std::vector<double> scales_;
  std::vector<double> shifts_;
};

/// Complex LCST values on a ScaleShiftGrid; rows = scales, cols = shifts.
class CoefficientPlane {
 public:
  CoefficientPlane(ScaleShiftGrid grid, std::vector<cplx> values);
  static CoefficientPlane zeros(ScaleShiftGrid grid);

  const ScaleShiftGrid& grid() const { return grid_; }
  cplx operator()(std::size_t i, std::size_t j) const {
    return values_[i * grid_.n_shifts() + j];
  }
  cplx& operator()(std::size_t i, std::size_t j) {
    return values_[i * grid_.n_shifts() + j];
  }
  const std::vector<cplx>& values() const { return values_; }

  /// Plane energy in the measure db da/a: trapezoid in log a, uniform in b.
  double energy() const;

  /// Plane-domain inner product <F,G> with the same measure.
  static cplx inner(const CoefficientPlane& f, const CoefficientPlane& g);

  /// sqrt(mean |value|^2), the scale used for relative residuals.
  double rms() const;

 private:
  ScaleShiftGrid grid_;
  std::vector<cplx> values_;
};

}  // namespace lcst
