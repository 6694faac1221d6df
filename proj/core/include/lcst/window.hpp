#pragma once

#include <memory>
#include <string>

#include "lcst/signal.hpp"

namespace lcst {

/// Analyzing window: an analytic family member or a sampled signal.
/// Evaluation off a sampled grid uses linear interpolation; outside the
/// sampled support the window is zero.
class WindowSpec {
 public:
  enum class Kind { Gaussian, Hann, Boxcar, Sampled };

  static WindowSpec gaussian(double width);
  static WindowSpec hann(double support);  // support = half-width
  static WindowSpec boxcar(double lo, double hi);  // indicator of [lo, hi)
  static WindowSpec sampled(Signal s);

  cplx operator()(double t) const;

  Kind kind() const { return kind_; }
  double width() const { return width_; }
  const Signal& samples() const;

  /// [-extent, extent] contains all but ~1e-10 of the window's mass
  /// (relative), used to size quadrature grids.
  double suggested_extent() const;

  /// Short descriptor, e.g. "gaussian:2" — used in plane metadata.
  std::string descriptor() const;

 private:
  WindowSpec() = default;
  Kind kind_ = Kind::Gaussian;
  double width_ = 1.0;   // gaussian width / hann half-support
  double lo_ = 0.0, hi_ = 1.0;  // boxcar bounds
  std::shared_ptr<const Signal> samples_;
};

}  // namespace lcst
